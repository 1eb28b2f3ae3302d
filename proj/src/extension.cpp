#include "skewpbw/extension.hpp"

#include <random>

namespace skewpbw {

namespace {

std::vector<std::uint32_t> word_of(const Monomial& m) {
  std::vector<std::uint32_t> w;
  for (std::uint32_t v = 0; v < m.exps.size(); ++v) w.insert(w.end(), m.exps[v], v);
  return w;
}

Monomial monomial_of(const std::vector<std::uint32_t>& w, std::size_t n) {
  Monomial m = Monomial::one(n);
  for (auto v : w) ++m.exps[v];
  return m;
}

bool sorted_word(const std::vector<std::uint32_t>& w, std::size_t& descent) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p] > w[p + 1]) {
      descent = p;
      return false;
    }
  }
  return true;
}

}  // namespace

Extension::Ptr Extension::create(ExtensionSpec spec, const ValidationOptions& opts) {
  auto ext = create_unchecked(std::move(spec));
  ext->validate(opts);
  return ext;
}

Extension::Ptr Extension::create_unchecked(ExtensionSpec spec) {
  if (!spec.ring) throw InvalidParameter("extension without a base ring");
  if (!spec.family.ring) spec.family.ring = spec.ring;
  if (spec.family.ring.get() != spec.ring.get()) throw InvalidParameter("maps must live on the extension's ring");
  if (spec.family.sigmas.size() != spec.family.deltas.size()) {
    throw InvalidParameter("need as many derivations as endomorphisms");
  }
  const std::size_t n = spec.nvars();
  if (spec.order.precedence().empty() && n > 0) spec.order = MonomialOrder::deglex(n);
  if (spec.order.precedence().size() != n) throw InvalidParameter("monomial order has the wrong number of variables");
  if (spec.variable_names.empty()) {
    for (std::size_t i = 0; i < n; ++i) spec.variable_names.push_back("x" + std::to_string(i + 1));
  }
  if (spec.variable_names.size() != n) throw InvalidParameter("wrong number of variable names");
  for (const auto& [key, rel] : spec.relations) {
    if (key.first >= key.second || key.second >= n) {
      throw InvalidParameter("relation indices must satisfy i < j < n");
    }
    if (rel.c >= spec.ring->size()) throw InvalidParameter("relation constant out of range");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto [it, inserted] = spec.relations.try_emplace({i, j}, Relation{spec.ring->one(), SkewPoly(n)});
      if (it->second.tail.nvars() == 0 && it->second.tail.is_zero()) it->second.tail = SkewPoly(n);
      if (it->second.tail.nvars() != n) throw InvalidParameter("relation tail has the wrong number of variables");
    }
  }
  return Ptr(new Extension(std::move(spec)));
}

ValidationReport Extension::validate(const ValidationOptions& opts) const {
  const auto& R = ring();
  const std::size_t n = nvars();
  auto pair_name = [&](std::size_t i, std::size_t j) {
    return "(" + variable_names()[i] + ", " + variable_names()[j] + ")";
  };

  for (const auto& [key, rel] : spec_.relations) {
    if (!R.is_central(rel.c)) {
      throw CentralityViolation("constant " + R.format(rel.c) + " of " + pair_name(key.first, key.second) +
                                " is not central");
    }
    if (!R.inverse(rel.c)) {
      throw NonUnitConstant("constant " + R.format(rel.c) + " of " + pair_name(key.first, key.second) +
                            " is not a unit");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> hit(R.size(), false);
    for (Elem a = 0; a < R.size(); ++a) {
      const Elem v = family().sigmas[i].table.at(a);
      if (v >= R.size()) throw InvalidParameter("map table entry out of range");
      if (hit[v]) throw InjectivityViolation("sigma of " + variable_names()[i] + " is not injective");
      hit[v] = true;
    }
  }
  family().validate();

  for (const auto& [key, rel] : spec_.relations) {
    Monomial lead = Monomial::var(n, key.first);
    ++lead.exps[key.second];
    for (const auto& [m, c] : rel.tail.terms()) {
      if (!order().less(m, lead)) {
        throw TailOrderViolation("tail term " + format_monomial(m) + " of " + pair_name(key.first, key.second) +
                                 " is not below " + format_monomial(lead));
      }
    }
  }

  ValidationReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto xi = variable(i), xj = variable(j), xk = variable(k);
        const auto left = mul(mul(xk, xj), xi);
        const auto right = mul(xk, mul(xj, xi));
        ++rep.triples_checked;
        if (left != right) {
          throw InconsistentPresentation(
              variable_names()[k] + "*" + variable_names()[j] + "*" + variable_names()[i], format(left),
              format(right));
        }
      }
    }
  }

  std::vector<Elem> scalars;
  if (R.size() <= opts.scalar_cap) {
    for (Elem r = 0; r < R.size(); ++r) scalars.push_back(r);
  } else {
    rep.scalar_sampled = true;
    for (auto k : kernels::sample_indices(R.size(), opts.scalar_samples, opts.seed)) {
      scalars.push_back(static_cast<Elem>(k));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto xi = variable(i), xj = variable(j);
      const auto xji = mul(xj, xi);
      for (Elem r : scalars) {
        const auto left = mul(xji, constant(r));
        const auto right = mul(xj, x_times_r(i, r));
        ++rep.scalar_checks;
        if (left != right) {
          throw InconsistentPresentation(variable_names()[j] + "*" + variable_names()[i] + "*" + R.format(r),
                                         format(left), format(right));
        }
      }
    }
  }
  return rep;
}

SkewPoly Extension::constant(Elem r) const { return monomial(Monomial::one(nvars()), r); }

SkewPoly Extension::variable(std::size_t i) const {
  if (i >= nvars()) throw UnknownVariable("variable index " + std::to_string(i) + " out of range");
  return monomial(Monomial::var(nvars(), i), ring().one());
}

SkewPoly Extension::monomial(const Monomial& m, Elem c) const {
  SkewPoly f(nvars());
  f.add_term(ring(), m, c);
  return f;
}

SkewPoly Extension::add(const SkewPoly& f, const SkewPoly& g) const {
  SkewPoly h = f;
  for (const auto& [m, c] : g.terms()) h.add_term(ring(), m, c);
  return h;
}

SkewPoly Extension::neg(const SkewPoly& f) const {
  SkewPoly h(nvars());
  for (const auto& [m, c] : f.terms()) h.add_term(ring(), m, ring().neg(c));
  return h;
}

SkewPoly Extension::sub(const SkewPoly& f, const SkewPoly& g) const { return add(f, neg(g)); }

SkewPoly Extension::scale(Elem r, const SkewPoly& f) const {
  SkewPoly h(nvars());
  for (const auto& [m, c] : f.terms()) h.add_term(ring(), m, ring().mul(r, c));
  return h;
}

SkewPoly Extension::x_times_r(std::size_t i, Elem r) const {
  SkewPoly h(nvars());
  h.add_term(ring(), Monomial::var(nvars(), i), family().sigmas[i](r));
  h.add_term(ring(), Monomial::one(nvars()), family().deltas[i](r));
  return h;
}

SkewPoly Extension::x_alpha_times_r(const Monomial& alpha, Elem r) const {
  const auto& R = ring();
  const auto& F = family();
  const std::size_t n = nvars();
  SkewPoly out(n);
  if (r == R.zero()) return out;
  if (alpha.is_one()) {
    out.add_term(R, alpha, r);
    return out;
  }

  // x_k^a s = sigma_k^a(s) x_k^a + sum_j x_k^(a-j) delta_k(sigma_k^(j-1)(s)) x_k^(j-1).
  // Variables after k have already been moved past r, so the block for x_k
  // acts on s = sigma_{k+1}^.. ... sigma_n^..(r); everything left of the
  // delta-term is again of the form x^alpha' s' with alpha' supported on
  // variables <= k, so its expansion concatenates with the right part
  // without reordering.
  Elem s = r;
  for (std::size_t k = n; k-- > 0;) {
    Elem t = s;
    for (std::uint32_t j = 1; j <= alpha.exps[k]; ++j) {
      const Elem d = F.deltas[k](t);
      if (d != R.zero()) {
        Monomial left = alpha;
        left.exps[k] -= j;
        for (std::size_t v = k + 1; v < n; ++v) left.exps[v] = 0;
        Monomial right = Monomial::one(n);
        right.exps[k] = j - 1;
        for (std::size_t v = k + 1; v < n; ++v) right.exps[v] = alpha.exps[v];
        const SkewPoly inner = x_alpha_times_r(left, d);
        for (const auto& [m, c] : inner.terms()) out.add_term(R, m + right, c);
      }
      t = F.sigmas[k](t);
    }
    s = t;
  }
  out.add_term(R, alpha, s);
  return out;
}

void Extension::accumulate(const FiniteRing& ring, WordPoly& p, Word w, Elem c) {
  if (c == ring.zero()) return;
  auto [it, inserted] = p.try_emplace(std::move(w), c);
  if (inserted) return;
  it->second = ring.add(it->second, c);
  if (it->second == ring.zero()) p.erase(it);
}

Extension::WordPoly Extension::push_left(const Word& prefix, Elem r) const {
  const auto& R = ring();
  WordPoly cur;
  accumulate(R, cur, {}, r);
  for (std::size_t p = prefix.size(); p-- > 0;) {
    const auto v = prefix[p];
    WordPoly next;
    for (const auto& [w, s] : cur) {
      Word with;
      with.reserve(w.size() + 1);
      with.push_back(v);
      with.insert(with.end(), w.begin(), w.end());
      accumulate(R, next, std::move(with), family().sigmas[v](s));
      accumulate(R, next, w, family().deltas[v](s));
    }
    cur = std::move(next);
  }
  return cur;
}

void Extension::reduce(WordPoly& work, SkewPoly& out, std::uint64_t& budget) const {
  const auto& R = ring();
  const std::size_t n = nvars();
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key();
    const Elem e = node.mapped();
    std::size_t p = 0;
    if (sorted_word(w, p)) {
      out.add_term(R, monomial_of(w, n), e);
      continue;
    }
    if (budget == 0) throw RewriteBudgetExceeded("rewrite budget exhausted");
    --budget;

    const auto j = w[p], i = w[p + 1];
    const Relation& rel = spec_.relations.at({i, j});
    const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());

    auto emit = [&](Elem coef, const Word& middle) {
      for (const auto& [pw, d] : push_left(prefix, coef)) {
        Word nw = pw;
        nw.insert(nw.end(), middle.begin(), middle.end());
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        accumulate(R, work, std::move(nw), R.mul(e, d));
      }
    };
    emit(rel.c, {i, j});
    for (const auto& [m, t] : rel.tail.terms()) emit(t, word_of(m));
  }
}

SkewPoly Extension::mul(const SkewPoly& f, const SkewPoly& g, std::uint64_t budget) const {
  const auto& R = ring();
  WordPoly work;
  for (const auto& [alpha, a] : f.terms()) {
    const Word wa = word_of(alpha);
    for (const auto& [beta, b] : g.terms()) {
      const Word wb = word_of(beta);
      for (const auto& [w, d] : push_left(wa, b)) {
        Word nw = w;
        nw.insert(nw.end(), wb.begin(), wb.end());
        accumulate(R, work, std::move(nw), R.mul(a, d));
      }
    }
  }
  SkewPoly out(nvars());
  reduce(work, out, budget);
  return out;
}

SkewPoly Extension::pow(const SkewPoly& f, std::uint64_t k) const {
  SkewPoly result = one();
  SkewPoly base = f;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

LeadingData Extension::leading(const SkewPoly& f) const {
  LeadingData ld;
  ld.lm = Monomial::one(nvars());
  ld.lc = ring().zero();
  for (const auto& [m, c] : f.terms()) {
    if (ld.zero || order().less(ld.lm, m)) {
      ld.zero = false;
      ld.lm = m;
      ld.lc = c;
    }
  }
  ld.deg = ld.zero ? 0 : ld.lm.degree();
  return ld;
}

std::string Extension::format_monomial(const Monomial& m) const {
  std::string s;
  for (std::size_t v = 0; v < m.exps.size(); ++v) {
    if (m.exps[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += variable_names()[v];
    if (m.exps[v] > 1) s += "^" + std::to_string(m.exps[v]);
  }
  return s.empty() ? "1" : s;
}

std::string Extension::format(const SkewPoly& f) const {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& m : f.support(order())) {
    const Elem c = f.coeff(m, ring().zero());
    std::string cs = ring().format(c);
    if (cs.find_first_of("+- ") != std::string::npos) cs = "(" + cs + ")";
    if (!s.empty()) s += " + ";
    if (m.is_one()) {
      s += cs;
    } else if (c == ring().one()) {
      s += format_monomial(m);
    } else {
      s += cs + "*" + format_monomial(m);
    }
  }
  return s;
}

}  // namespace skewpbw
