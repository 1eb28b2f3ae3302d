#include "skewpbw/nilarmendariz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace skewpbw {

Analysis Analysis::run(Extension::Ptr ext, const ScanOptions& opts) {
  Analysis an;
  an.opts = opts;
  const auto& R = ext->ring();
  an.nil = nil_mask(R);
  for (Elem a = 0; a < R.size(); ++a) {
    if (!an.nil[a]) continue;
    an.max_nil_index = std::max(an.max_nil_index, nilpotency_index(R, a).value_or(1));
  }
  an.reversible = check_ring_class(R, RingClass::reversible, opts);
  an.compat = check_compatibility(ext->family(), opts);
  an.rigid = check_sigma_rigid(ext->family(), opts);
  an.ext = std::move(ext);
  return an;
}

bool Analysis::theorem_hypotheses() const {
  return reversible.holds && !reversible.sampled && compat.sigma.verdict == Verdict::holds &&
         compat.delta.verdict == Verdict::holds;
}

const char* nil_method_name(NilMethod m) {
  switch (m) {
    case NilMethod::coefficient_criterion: return "coefficient_criterion";
    case NilMethod::power_oracle: return "power_oracle";
    case NilMethod::both_agree: return "both_agree";
  }
  return "?";
}

std::uint64_t oracle_bound(const Analysis& an, const SkewPoly& f) {
  return static_cast<std::uint64_t>(f.size()) * an.max_nil_index + 1;
}

NilPolyVerdict is_nilpotent_poly_oracle(const Analysis& an, const SkewPoly& f) {
  NilPolyVerdict v;
  v.method = NilMethod::power_oracle;
  if (f.is_zero()) {
    v.exponent_used = 1;
    return v;
  }
  const auto bound = oracle_bound(an, f);
  SkewPoly p = f;
  for (std::uint64_t e = 1; e <= bound; ++e) {
    if (p.is_zero()) {
      v.exponent_used = e;
      return v;
    }
    if (e < bound) p = an.ext->mul(p, f);
  }
  v.nilpotent = false;
  v.exponent_used = bound;
  v.at_oracle_bound = !an.theorem_hypotheses();
  return v;
}

NilPolyVerdict is_nilpotent_poly_criterion(const Analysis& an, const SkewPoly& f) {
  if (!an.theorem_hypotheses()) {
    throw HypothesisNotVerified("the coefficient criterion needs R reversible and (Sigma, Delta)-compatible");
  }
  NilPolyVerdict v;
  v.method = NilMethod::coefficient_criterion;
  for (const auto& [m, c] : f.terms()) v.nilpotent = v.nilpotent && an.nil[c];
  return v;
}

NilPolyVerdict is_nilpotent_poly_checked(const Analysis& an, const SkewPoly& f) {
  const auto crit = is_nilpotent_poly_criterion(an, f);
  auto orc = is_nilpotent_poly_oracle(an, f);
  if (crit.nilpotent != orc.nilpotent) {
    throw std::logic_error("nilpotency oracle and coefficient criterion disagree on " + an.ext->format(f));
  }
  orc.method = NilMethod::both_agree;
  return orc;
}

const char* variant_name(ArmendarizVariant v) {
  switch (v) {
    case ArmendarizVariant::skew_pi: return "skew-pi";
    case ArmendarizVariant::sigma_delta_skew: return "sigma-delta-skew";
    case ArmendarizVariant::sigma_skew: return "sigma-skew";
    case ArmendarizVariant::skew: return "skew";
  }
  return "?";
}

std::optional<ArmendarizVariant> parse_variant(std::string_view name) {
  for (auto v : {ArmendarizVariant::skew_pi, ArmendarizVariant::sigma_delta_skew, ArmendarizVariant::sigma_skew,
                 ArmendarizVariant::skew}) {
    if (name == variant_name(v)) return v;
  }
  return std::nullopt;
}

std::string variant_property(ArmendarizVariant v) {
  std::string s = variant_name(v);
  std::replace(s.begin(), s.end(), '-', '_');
  return s + "_armendariz";
}

SearchBound degree_bound(const Extension& ext, std::uint32_t d) {
  const std::size_t n = ext.nvars();
  SearchBound b;
  std::function<void(std::size_t, Monomial&, std::uint32_t)> rec = [&](std::size_t v, Monomial& m,
                                                                        std::uint32_t left) {
    if (v == n) {
      b.support.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m.exps[v] = e;
      rec(v + 1, m, left - e);
    }
    m.exps[v] = 0;
  };
  Monomial m = Monomial::one(n);
  rec(0, m, d);
  std::sort(b.support.begin(), b.support.end(),
            [&](const Monomial& x, const Monomial& y) { return ext.order().less(x, y); });
  return b;
}

long double pair_space(const Analysis& an, const SearchBound& bound) {
  return std::pow(static_cast<long double>(an.ring().size()), 2.0L * bound.support.size());
}

namespace {

using Sparse = std::vector<std::pair<std::uint32_t, Elem>>;

struct ScanScratch {
  std::vector<Elem> a, b, acc;
  std::unordered_map<std::string, bool> cache;
};

bool applies_map(ArmendarizVariant v) { return v == ArmendarizVariant::sigma_skew; }

}  // namespace

PropertyReport check_armendariz(const Analysis& an, ArmendarizVariant variant, SearchBound bound,
                                const ArmendarizOptions& opts) {
  const auto& ext = *an.ext;
  const auto& R = ext.ring();
  const Elem zero = R.zero();
  const std::uint32_t N = R.size();
  if (bound.support.empty()) throw InvalidParameter("search support is empty");
  std::sort(bound.support.begin(), bound.support.end(),
            [&](const Monomial& x, const Monomial& y) { return ext.order().less(x, y); });
  const auto& sup = bound.support;
  const std::size_t s = sup.size();

  // T[(i * s + j) * N + b] = X_i b Y_j over a shared dense monomial index.
  std::map<Monomial, std::uint32_t> index;
  std::vector<Monomial> monos;
  std::vector<Sparse> T(s * s * N);
  for (std::size_t i = 0; i < s; ++i) {
    const auto Xi = ext.monomial(sup[i], R.one());
    for (std::size_t j = 0; j < s; ++j) {
      for (Elem b = 0; b < N; ++b) {
        const auto prod = ext.mul(Xi, ext.monomial(sup[j], b));
        auto& out = T[(i * s + j) * N + b];
        for (const auto& [m, c] : prod.terms()) {
          auto [it, fresh] = index.try_emplace(m, static_cast<std::uint32_t>(monos.size()));
          if (fresh) monos.push_back(m);
          out.emplace_back(it->second, c);
        }
      }
    }
  }
  std::vector<RingMap> sig;
  if (applies_map(variant)) {
    for (const auto& m : sup) sig.push_back(sigma_power(ext.family(), m));
  }
  std::optional<std::size_t> one_pos;
  for (std::size_t i = 0; i < s; ++i) {
    if (sup[i].is_one()) one_pos = i;
  }

  const bool criterion = variant == ArmendarizVariant::skew_pi && an.theorem_hypotheses();
  const long double full = pair_space(an, bound);
  const bool sampled = N > 16 || full > static_cast<long double>(opts.max_pairs);
  std::vector<std::uint64_t> points;
  std::uint64_t count = 0;
  if (sampled) {
    // Each coordinate drawn separately so the space may exceed 2^64.
    std::mt19937_64 rng(opts.seed);
    points.resize(opts.samples * 2 * s);
    for (auto& p : points) p = rng() % N;
    count = opts.samples;
    bound.scope = {ScopeKind::sampled, opts.samples, opts.seed};
  } else {
    count = static_cast<std::uint64_t>(full);
    bound.scope = {ScopeKind::all, 0, opts.seed};
  }

  auto decode = [&](std::uint64_t k, std::vector<Elem>& a, std::vector<Elem>& b) {
    a.resize(s);
    b.resize(s);
    if (sampled) {
      for (std::size_t t = 0; t < s; ++t) {
        a[t] = static_cast<Elem>(points[k * 2 * s + t]);
        b[t] = static_cast<Elem>(points[k * 2 * s + s + t]);
      }
      return;
    }
    for (std::size_t t = s; t-- > 0;) {
      b[t] = static_cast<Elem>(k % N);
      k /= N;
    }
    for (std::size_t t = s; t-- > 0;) {
      a[t] = static_cast<Elem>(k % N);
      k /= N;
    }
  };

  auto product = [&](const std::vector<Elem>& a, const std::vector<Elem>& b, std::vector<Elem>& acc) {
    acc.assign(monos.size(), zero);
    for (std::size_t i = 0; i < s; ++i) {
      if (a[i] == zero) continue;
      for (std::size_t j = 0; j < s; ++j) {
        for (const auto& [idx, c] : T[(i * s + j) * N + b[j]]) acc[idx] = R.add(acc[idx], R.mul(a[i], c));
      }
    }
  };
  auto to_poly = [&](const std::vector<Elem>& acc) {
    SkewPoly p(ext.nvars());
    for (std::size_t t = 0; t < acc.size(); ++t) p.add_term(R, monos[t], acc[t]);
    return p;
  };
  auto all_zero = [&](const std::vector<Elem>& acc) {
    return std::all_of(acc.begin(), acc.end(), [&](Elem c) { return c == zero; });
  };

  // First (i, j) whose conclusion fails, or nullopt.
  auto conclusion_fails = [&](const std::vector<Elem>& a,
                              const std::vector<Elem>& b) -> std::optional<std::pair<std::size_t, std::size_t>> {
    switch (variant) {
      case ArmendarizVariant::skew_pi:
        for (std::size_t i = 0; i < s; ++i) {
          for (std::size_t j = 0; j < s; ++j) {
            if (!an.nil[R.mul(a[i], b[j])]) return std::pair{i, j};
          }
        }
        break;
      case ArmendarizVariant::sigma_delta_skew:
        for (std::size_t i = 0; i < s; ++i) {
          if (a[i] == zero) continue;
          for (std::size_t j = 0; j < s; ++j) {
            for (const auto& [idx, c] : T[(i * s + j) * N + b[j]]) {
              if (R.mul(a[i], c) != zero) return std::pair{i, j};
            }
          }
        }
        break;
      case ArmendarizVariant::sigma_skew:
        for (std::size_t i = 0; i < s; ++i) {
          for (std::size_t j = 0; j < s; ++j) {
            if (R.mul(a[i], sig[i](b[j])) != zero) return std::pair{i, j};
          }
        }
        break;
      case ArmendarizVariant::skew:
        if (!one_pos) break;
        for (std::size_t j = 0; j < s; ++j) {
          if (R.mul(a[*one_pos], b[j]) != zero) return std::pair{*one_pos, j};
        }
        break;
    }
    return std::nullopt;
  };

  auto premise_holds = [&](ScanScratch& sc) {
    if (variant != ArmendarizVariant::skew_pi) return all_zero(sc.acc);
    if (criterion) {
      return std::all_of(sc.acc.begin(), sc.acc.end(), [&](Elem c) { return static_cast<bool>(an.nil[c]); });
    }
    std::string key(reinterpret_cast<const char*>(sc.acc.data()), sc.acc.size() * sizeof(Elem));
    if (auto it = sc.cache.find(key); it != sc.cache.end()) return it->second;
    const bool nilp = is_nilpotent_poly_oracle(an, to_poly(sc.acc)).nilpotent;
    sc.cache.emplace(std::move(key), nilp);
    return nilp;
  };

  auto pred = [&](std::uint64_t k, ScanScratch& sc) {
    decode(k, sc.a, sc.b);
    if (!conclusion_fails(sc.a, sc.b)) return false;
    product(sc.a, sc.b, sc.acc);
    return premise_holds(sc);
  };
  const auto hit = kernels::find_first(opts.parallel, count, [] { return ScanScratch{}; }, pred);

  PropertyReport r;
  r.property = variant_property(variant);
  r.verdict = Verdict::holds_at_bound;
  r.work_count = hit ? *hit + 1 : count;
  if (variant == ArmendarizVariant::skew_pi) {
    r.notes.push_back(criterion ? "premise decided by the coefficient criterion"
                                : "premise decided by the power oracle up to (m+1)k+1");
  }
  if (sampled) r.notes.push_back("coefficients sampled");
  if (hit) {
    std::vector<Elem> a, b, acc;
    decode(*hit, a, b);
    const auto ij = *conclusion_fails(a, b);
    PolyWitness w;
    w.f = SkewPoly(ext.nvars());
    w.g = SkewPoly(ext.nvars());
    for (std::size_t t = 0; t < s; ++t) {
      w.f.add_term(R, sup[t], a[t]);
      w.g.add_term(R, sup[t], b[t]);
    }
    w.left = sup[ij.first];
    w.right = sup[ij.second];
    const Elem ai = a[ij.first], bj = b[ij.second];
    switch (variant) {
      case ArmendarizVariant::skew_pi:
      case ArmendarizVariant::skew:
        w.product = R.mul(ai, bj);
        break;
      case ArmendarizVariant::sigma_skew:
        w.product = R.mul(ai, sig[ij.first](bj));
        break;
      case ArmendarizVariant::sigma_delta_skew:
        w.offending = ext.mul(ext.monomial(w.left, ai), ext.monomial(w.right, bj));
        w.product = w.offending->coeff(ext.leading(*w.offending).lm, zero);
        break;
    }
    r.verdict = Verdict::fails;
    r.witness = std::move(w);
  }
  r.bound = std::move(bound);
  return r;
}

bool armendariz_witness_reproduces(const Analysis& an, ArmendarizVariant variant, const PropertyReport& report) {
  if (report.verdict != Verdict::fails || !report.witness) return false;
  const auto* w = std::get_if<PolyWitness>(&*report.witness);
  if (w == nullptr) return false;
  const auto& ext = *an.ext;
  const auto& R = ext.ring();
  const Elem zero = R.zero();
  const auto fg = ext.mul(w->f, w->g);
  const Elem a = w->f.coeff(w->left, zero), b = w->g.coeff(w->right, zero);
  switch (variant) {
    case ArmendarizVariant::skew_pi:
      return w->product == R.mul(a, b) && !an.nil[w->product] && is_nilpotent_poly_oracle(an, fg).nilpotent;
    case ArmendarizVariant::sigma_delta_skew: {
      const auto term = ext.mul(ext.monomial(w->left, a), ext.monomial(w->right, b));
      return fg.is_zero() && !term.is_zero() && (!w->offending || *w->offending == term);
    }
    case ArmendarizVariant::sigma_skew: {
      const Elem p = R.mul(a, sigma_power(ext.family(), w->left)(b));
      return fg.is_zero() && p != zero && p == w->product;
    }
    case ArmendarizVariant::skew:
      return fg.is_zero() && w->left.is_one() && w->product == R.mul(a, b) && w->product != zero;
  }
  return false;
}

namespace {

RingMap word_map(const FiniteRing& ring, const MapFamily& family, const std::vector<std::size_t>& word) {
  RingMap m = builders::identity(ring);
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = compose(family.deltas.at(*it), m);
  return m;
}

constexpr const char* kLawSD = "ab in nil(R) => a*sigma^alpha(delta^beta(b)) in nil(R)";
constexpr const char* kLawDS = "ab in nil(R) => a*delta^beta(sigma^alpha(b)) in nil(R)";
constexpr const char* kLawReflect = "a*sigma^alpha(b) in nil(R) => ab in nil(R)";

}  // namespace

std::vector<PropertyReport> verify_lemma_nil_stability(const Analysis& an) {
  if (!an.compat.compatible() || !an.compat.closures) {
    const auto c = an.compat.combined();
    std::string why = "R is not (Sigma, Delta)-compatible";
    if (c.verdict == Verdict::undecided_at_cap) why = "(Sigma, Delta)-compatibility undecided at the closure cap";
    throw HypothesisNotVerified(why);
  }
  const auto& R = an.ring();
  const auto& S = an.compat.closures->sigma;
  const auto& D = an.compat.closures->delta;
  const std::uint64_t N = R.size();
  std::vector<PropertyReport> out;

  PropertyReport first;
  first.property = "lemma_sigma_delta_nil";
  if (!an.reversible.holds) {
    first.verdict = Verdict::not_applicable;
    first.notes.push_back("R is not reversible");
  } else {
    const std::uint64_t per = N * N;
    const auto res = kernels::scan(S.size() * D.size() * per, an.opts, [&](std::uint64_t k) {
      const auto& s = S.maps[k / (D.size() * per)];
      const auto& d = D.maps[(k / per) % D.size()];
      const Elem a = static_cast<Elem>((k / N) % N), b = static_cast<Elem>(k % N);
      if (!an.nil[R.mul(a, b)]) return false;
      return !an.nil[R.mul(a, s(d(b)))] || !an.nil[R.mul(a, d(s(b)))];
    });
    first.verdict = res.sampled ? Verdict::holds_at_bound : Verdict::holds;
    first.work_count = res.work_count;
    if (res.sampled) first.notes.push_back("sampled");
    if (res.index) {
      const auto k = *res.index;
      const auto si = k / (D.size() * per), di = (k / per) % D.size();
      const Elem a = static_cast<Elem>((k / N) % N), b = static_cast<Elem>(k % N);
      const bool sd = !an.nil[R.mul(a, S.maps[si](D.maps[di](b)))];
      first.verdict = Verdict::fails;
      first.witness = MapWitness{sd ? kLawSD : kLawDS, S.alphas[si], D.words[di], {a, b}};
    }
  }
  out.push_back(std::move(first));

  PropertyReport second;
  second.property = "lemma_sigma_nil_reflect";
  const auto res = kernels::scan(S.size() * N * N, an.opts, [&](std::uint64_t k) {
    const auto& s = S.maps[k / (N * N)];
    const Elem a = static_cast<Elem>((k / N) % N), b = static_cast<Elem>(k % N);
    return an.nil[R.mul(a, s(b))] && !an.nil[R.mul(a, b)];
  });
  second.verdict = res.sampled ? Verdict::holds_at_bound : Verdict::holds;
  second.work_count = res.work_count;
  if (res.sampled) second.notes.push_back("sampled");
  if (res.index) {
    const auto k = *res.index;
    second.verdict = Verdict::fails;
    second.witness = MapWitness{kLawReflect, S.alphas[k / (N * N)], std::nullopt,
                                {static_cast<Elem>((k / N) % N), static_cast<Elem>(k % N)}};
  }
  out.push_back(std::move(second));
  return out;
}

bool lemma_witness_reproduces(const Analysis& an, const PropertyReport& report) {
  if (report.verdict != Verdict::fails || !report.witness) return false;
  const auto* w = std::get_if<MapWitness>(&*report.witness);
  if (w == nullptr || w->elems.size() != 2 || !w->sigma_alpha) return false;
  const auto& R = an.ring();
  const auto s = sigma_power(an.ext->family(), *w->sigma_alpha);
  const Elem a = w->elems[0], b = w->elems[1];
  if (w->law == kLawReflect) return an.nil[R.mul(a, s(b))] && !an.nil[R.mul(a, b)];
  if (!w->delta_word) return false;
  const auto d = word_map(R, an.ext->family(), *w->delta_word);
  if (!an.nil[R.mul(a, b)]) return false;
  if (w->law == kLawSD) return !an.nil[R.mul(a, s(d(b)))];
  if (w->law == kLawDS) return !an.nil[R.mul(a, d(s(b)))];
  return false;
}

PropertyReport ring_class_report(const FiniteRing& ring, const RingClassVerdict& v) {
  (void)ring;
  PropertyReport r;
  r.property = ring_class_name(v.ring_class);
  r.work_count = v.work_count;
  if (v.holds) {
    r.verdict = v.sampled ? Verdict::holds_at_bound : Verdict::holds;
  } else {
    r.verdict = Verdict::fails;
    r.witness = ElementWitness{v.law, v.witness};
  }
  if (v.sampled) r.notes.push_back("sampled");
  return r;
}

const char* implication_status_name(ImplicationStatus s) {
  switch (s) {
    case ImplicationStatus::vacuous: return "vacuous";
    case ImplicationStatus::confirmed: return "confirmed";
    case ImplicationStatus::violation: return "violation";
    case ImplicationStatus::search_only: return "search_only";
    case ImplicationStatus::undecided: return "undecided";
  }
  return "?";
}

namespace {

PropertyReport criterion_agreement(const Analysis& an, const SearchBound& bound, const ArmendarizOptions& opts) {
  const auto& ext = *an.ext;
  const auto& R = ext.ring();
  const std::uint64_t N = R.size();
  const std::size_t s = bound.support.size();
  const long double full = std::pow(static_cast<long double>(N), static_cast<long double>(s));
  const bool sampled = full > static_cast<long double>(opts.max_pairs);
  std::vector<std::uint64_t> points;
  std::uint64_t count = static_cast<std::uint64_t>(full);
  if (sampled) {
    std::mt19937_64 rng(opts.seed);
    points.resize(opts.samples * s);
    for (auto& p : points) p = rng() % N;
    count = opts.samples;
  }
  auto decode = [&](std::uint64_t k) {
    SkewPoly f(ext.nvars());
    for (std::size_t t = s; t-- > 0;) {
      Elem c;
      if (sampled) {
        c = static_cast<Elem>(points[k * s + t]);
      } else {
        c = static_cast<Elem>(k % N);
        k /= N;
      }
      f.add_term(R, bound.support[t], c);
    }
    return f;
  };
  const auto hit = kernels::find_first(opts.parallel, count, [&](std::uint64_t k) {
    const auto f = decode(k);
    return is_nilpotent_poly_criterion(an, f).nilpotent != is_nilpotent_poly_oracle(an, f).nilpotent;
  });
  PropertyReport r;
  r.property = "nil_criterion_agreement";
  r.verdict = Verdict::holds_at_bound;
  r.work_count = hit ? *hit + 1 : count;
  SearchBound b = bound;
  b.scope = sampled ? CoefficientScope{ScopeKind::sampled, opts.samples, opts.seed}
                    : CoefficientScope{ScopeKind::all, 0, opts.seed};
  r.bound = b;
  if (hit) {
    PolyWitness w;
    w.f = decode(*hit);
    w.g = SkewPoly(ext.nvars());
    w.left = w.right = Monomial::one(ext.nvars());
    r.verdict = Verdict::fails;
    r.witness = std::move(w);
  }
  return r;
}

}  // namespace

std::vector<ImplicationReport> verify_implication_suite(const Analysis& an, const SearchBound& bound,
                                                        const ArmendarizOptions& opts) {
  std::map<ArmendarizVariant, PropertyReport> memo;
  auto arm = [&](ArmendarizVariant v) -> const PropertyReport& {
    auto it = memo.find(v);
    if (it == memo.end()) it = memo.emplace(v, check_armendariz(an, v, bound, opts)).first;
    return it->second;
  };
  const PropertyReport reversible = ring_class_report(an.ring(), an.reversible);
  const PropertyReport compat = an.compat.combined();
  const PropertyReport& sig_compat = an.compat.sigma;

  auto status_of = [](const std::vector<PropertyReport>& reps) {
    bool undecided = false;
    for (const auto& r : reps) {
      if (r.verdict == Verdict::fails) return ImplicationStatus::vacuous;
      if (!r.ok()) undecided = true;
    }
    return undecided ? ImplicationStatus::undecided : ImplicationStatus::confirmed;
  };

  using Producer = std::function<std::vector<PropertyReport>()>;
  std::vector<ImplicationReport> out;
  auto implication = [&](std::string name, std::vector<PropertyReport> ante, const Producer& cons,
                         bool search_only = false) {
    ImplicationReport rep;
    rep.name = std::move(name);
    rep.antecedents = std::move(ante);
    const auto a = status_of(rep.antecedents);
    if (a == ImplicationStatus::confirmed) {
      rep.consequents = cons();
      const auto c = status_of(rep.consequents);
      rep.status = c == ImplicationStatus::confirmed ? ImplicationStatus::confirmed
                   : c == ImplicationStatus::vacuous ? ImplicationStatus::violation
                                                     : ImplicationStatus::undecided;
    } else {
      rep.status = a;
    }
    if (search_only) rep.status = ImplicationStatus::search_only;
    out.push_back(std::move(rep));
  };

  auto skew_pi = [&] { return std::vector<PropertyReport>{arm(ArmendarizVariant::skew_pi)}; };

  implication("nil_criterion_agreement", {reversible, compat},
              [&] { return std::vector<PropertyReport>{criterion_agreement(an, bound, opts)}; });
  implication("reversible_compatible_implies_skew_pi", {reversible, compat}, skew_pi);
  implication("sigma_compatible_sigma_delta_skew_implies_skew_pi",
              {sig_compat, arm(ArmendarizVariant::sigma_delta_skew)}, skew_pi);
  implication("sigma_compatible_sigma_skew_implies_skew_pi", {sig_compat, arm(ArmendarizVariant::sigma_skew)},
              skew_pi);
  implication("rigid_implies_skew_pi", {an.rigid}, skew_pi);
  implication("rigid_implies_reduced_and_compatible", {an.rigid}, [&] {
    return std::vector<PropertyReport>{
        ring_class_report(an.ring(), check_ring_class(an.ring(), RingClass::reduced, an.opts)), compat};
  });
  implication("conjecture_skew_compatible_implies_skew_pi", {arm(ArmendarizVariant::skew), compat}, skew_pi,
              true);
  return out;
}

}  // namespace skewpbw
