#include "skewpbw/ringmaps.hpp"

#include <map>

namespace skewpbw {

namespace {

void require_length(const FiniteRing& ring, const RingMap& m) {
  if (m.table.size() != ring.size()) {
    throw InvalidParameter("map table has " + std::to_string(m.table.size()) + " entries, ring has " +
                           std::to_string(ring.size()));
  }
  for (Elem v : m.table) {
    if (v >= ring.size()) throw InvalidParameter("map table entry out of range");
  }
}

template <class Pred>
std::optional<std::pair<Elem, Elem>> first_pair(const FiniteRing& ring, Pred&& pred) {
  const std::uint64_t n = ring.size();
  const auto hit = kernels::find_first(true, n * n, [&](std::uint64_t k) {
    return pred(static_cast<Elem>(k / n), static_cast<Elem>(k % n));
  });
  if (!hit) return std::nullopt;
  return std::pair{static_cast<Elem>(*hit / n), static_cast<Elem>(*hit % n)};
}

RingMap apply_word(const FiniteRing& ring, const MapFamily& family, const std::vector<std::size_t>& word) {
  RingMap m = builders::identity(ring);
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = compose(family.deltas.at(*it), m);
  return m;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::holds_at_bound: return "holds_at_bound";
    case Verdict::fails: return "fails";
    case Verdict::undecided_at_cap: return "undecided_at_cap";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

bool RingMap::is_identity() const {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] != i) return false;
  }
  return true;
}

bool RingMap::is_zero(Elem zero) const {
  for (Elem v : table) {
    if (v != zero) return false;
  }
  return true;
}

RingMap compose(const RingMap& outer, const RingMap& inner) {
  RingMap m;
  m.table.resize(inner.table.size());
  for (std::size_t i = 0; i < inner.table.size(); ++i) m.table[i] = outer.table[inner.table[i]];
  m.kind = MapKind::plain;
  return m;
}

void validate_map(const FiniteRing& ring, const RingMap& map, const RingMap* sigma) {
  require_length(ring, map);
  auto fmt2 = [&](Elem a, Elem b) { return std::vector<std::string>{ring.format(a), ring.format(b)}; };

  if (map.kind == MapKind::endomorphism) {
    if (map(ring.one()) != ring.one()) throw AxiomViolation("fixes_one", fmt2(ring.one(), map(ring.one())));
  }
  if (map.kind == MapKind::plain) return;

  if (auto w = first_pair(ring, [&](Elem a, Elem b) { return map(ring.add(a, b)) != ring.add(map(a), map(b)); })) {
    throw AxiomViolation("additive", fmt2(w->first, w->second));
  }
  if (map.kind == MapKind::endomorphism) {
    if (auto w = first_pair(ring, [&](Elem a, Elem b) { return map(ring.mul(a, b)) != ring.mul(map(a), map(b)); })) {
      throw AxiomViolation("multiplicative", fmt2(w->first, w->second));
    }
    if (auto w = first_pair(ring, [&](Elem a, Elem b) { return a < b && map(a) == map(b); })) {
      throw AxiomViolation("injective", fmt2(w->first, w->second));
    }
    return;
  }

  if (sigma == nullptr) throw InvalidParameter("sigma-derivation check needs its endomorphism");
  require_length(ring, *sigma);
  if (auto w = first_pair(ring, [&](Elem a, Elem b) {
        return map(ring.mul(a, b)) != ring.add(ring.mul((*sigma)(a), map(b)), ring.mul(map(a), b));
      })) {
    throw AxiomViolation("sigma_leibniz", fmt2(w->first, w->second));
  }
}

namespace builders {

RingMap identity(const FiniteRing& ring) {
  RingMap m;
  m.table.resize(ring.size());
  for (Elem a = 0; a < ring.size(); ++a) m.table[a] = a;
  m.kind = MapKind::endomorphism;
  return m;
}

RingMap zero(const FiniteRing& ring) {
  RingMap m;
  m.table.assign(ring.size(), ring.zero());
  m.kind = MapKind::sigma_derivation;
  return m;
}

RingMap coordinate_swap(const FiniteRing& ring) {
  if (ring.backend() != Backend::product || ring.factors().size() != 2 ||
      ring.factors()[0]->size() != ring.factors()[1]->size()) {
    throw InvalidParameter("coordinate swap needs a product of two equal factors");
  }
  RingMap m;
  m.table.resize(ring.size());
  for (Elem a = 0; a < ring.size(); ++a) {
    const auto c = ring.components(a);
    m.table[a] = ring.from_components({c[1], c[0]});
  }
  m.kind = MapKind::endomorphism;
  return m;
}

RingMap frobenius(const FiniteRing& ring) {
  RingMap m;
  m.table.resize(ring.size());
  m.kind = MapKind::endomorphism;
  switch (ring.backend()) {
    case Backend::modular:
    case Backend::matrix: {
      const auto p = ring.base_modulus();
      for (Elem a = 0; a < ring.size(); ++a) {
        auto parts = ring.components(a);
        for (auto& e : parts) {
          std::uint64_t r = 1 % p;
          for (std::uint32_t i = 0; i < p; ++i) r = (r * e) % p;
          e = static_cast<Elem>(r);
        }
        m.table[a] = ring.from_components(parts);
      }
      return m;
    }
    case Backend::product: {
      std::vector<RingMap> per;
      for (const auto& f : ring.factors()) per.push_back(frobenius(*f));
      for (Elem a = 0; a < ring.size(); ++a) {
        auto parts = ring.components(a);
        for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = per[i](parts[i]);
        m.table[a] = ring.from_components(parts);
      }
      return m;
    }
    case Backend::tables:
      break;
  }
  throw InvalidParameter("frobenius builder needs a modular, matrix or product ring");
}

RingMap formal_derivative(const FiniteRing& ring) {
  std::uint32_t p = 1;
  while (p * p < ring.size()) ++p;
  const auto expected = FiniteRing::build(RingDescriptor::dual_numbers(p));
  if (ring.backend() != Backend::tables || p * p != ring.size()) {
    throw InvalidParameter("formal derivative needs a dual-number ring F_p[t]/(t^2)");
  }
  for (Elem a = 0; a < ring.size(); ++a) {
    for (Elem b = 0; b < ring.size(); ++b) {
      if (ring.add(a, b) != expected->add(a, b) || ring.mul(a, b) != expected->mul(a, b)) {
        throw InvalidParameter("formal derivative needs a dual-number ring F_p[t]/(t^2)");
      }
    }
  }
  RingMap m;
  m.table.resize(ring.size());
  for (Elem a = 0; a < ring.size(); ++a) m.table[a] = a / p;
  m.kind = MapKind::sigma_derivation;
  return m;
}

RingMap inner_derivation(const FiniteRing& ring, const RingMap& sigma, Elem c) {
  RingMap m;
  m.table.resize(ring.size());
  for (Elem r = 0; r < ring.size(); ++r) m.table[r] = ring.sub(ring.mul(c, r), ring.mul(sigma(r), c));
  m.kind = MapKind::sigma_derivation;
  return m;
}

}  // namespace builders

MapFamily MapFamily::trivial(std::shared_ptr<const FiniteRing> ring, std::size_t n) {
  MapFamily f;
  for (std::size_t i = 0; i < n; ++i) {
    f.sigmas.push_back(builders::identity(*ring));
    f.deltas.push_back(builders::zero(*ring));
  }
  f.ring = std::move(ring);
  return f;
}

void MapFamily::validate() const {
  if (!ring) throw InvalidParameter("map family without a ring");
  if (sigmas.size() != deltas.size()) throw InvalidParameter("need as many derivations as endomorphisms");
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    RingMap s = sigmas[i];
    s.kind = MapKind::endomorphism;
    validate_map(*ring, s);
    RingMap d = deltas[i];
    d.kind = MapKind::sigma_derivation;
    validate_map(*ring, d, &s);
  }
}

RingMap sigma_power(const MapFamily& family, const Monomial& alpha) {
  RingMap m = builders::identity(*family.ring);
  for (std::size_t k = family.size(); k-- > 0;) {
    for (std::uint32_t e = 0; e < alpha.exps.at(k); ++e) m = compose(family.sigmas[k], m);
  }
  m.kind = MapKind::endomorphism;
  return m;
}

std::optional<std::size_t> MonoidClosure::find(const RingMap& m) const {
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].table == m.table) return i;
  }
  return std::nullopt;
}

MonoidClosure sigma_closure(const MapFamily& family, std::size_t cap) {
  const std::size_t n = family.size();
  const auto& ring = *family.ring;

  MonoidClosure cl;
  cl.maps.push_back(builders::identity(ring));
  cl.alphas.push_back(Monomial::one(n));

  for (std::size_t k = n; k-- > 0;) {
    // Distinct powers sigma_k^0, sigma_k^1, ... until the first repeat.
    std::vector<RingMap> powers{builders::identity(ring)};
    std::map<std::vector<Elem>, bool> seen{{powers[0].table, true}};
    while (true) {
      RingMap next = compose(family.sigmas[k], powers.back());
      if (!seen.emplace(next.table, true).second) break;
      powers.push_back(std::move(next));
      if (powers.size() > cap) throw ClosureCapExceeded("sigma power cycle exceeds closure cap");
    }

    MonoidClosure grown;
    std::map<std::vector<Elem>, std::size_t> index;
    for (std::size_t s = 0; s < cl.maps.size(); ++s) {
      for (std::uint32_t e = 0; e < powers.size(); ++e) {
        RingMap m = compose(powers[e], cl.maps[s]);
        if (!index.emplace(m.table, grown.maps.size()).second) continue;
        Monomial alpha = cl.alphas[s];
        alpha.exps[k] = e;
        m.kind = MapKind::endomorphism;
        grown.maps.push_back(std::move(m));
        grown.alphas.push_back(std::move(alpha));
        if (grown.maps.size() > cap) throw ClosureCapExceeded("sigma closure exceeds cap of " + std::to_string(cap));
      }
    }
    cl = std::move(grown);
  }
  return cl;
}

MonoidClosure delta_closure(const MapFamily& family, std::size_t cap) {
  MonoidClosure cl;
  std::map<std::vector<Elem>, std::size_t> index;
  auto push = [&](RingMap m, std::vector<std::size_t> word) {
    if (!index.emplace(m.table, cl.maps.size()).second) return;
    cl.maps.push_back(std::move(m));
    cl.words.push_back(std::move(word));
    if (cl.maps.size() > cap) throw ClosureCapExceeded("delta closure exceeds cap of " + std::to_string(cap));
  };
  for (std::size_t i = 0; i < family.size(); ++i) push(family.deltas[i], {i});
  for (std::size_t next = 0; next < cl.maps.size(); ++next) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      std::vector<std::size_t> word{i};
      word.insert(word.end(), cl.words[next].begin(), cl.words[next].end());
      push(compose(family.deltas[i], cl.maps[next]), std::move(word));
    }
  }
  return cl;
}

ClosurePair compatibility_closure(const MapFamily& family, std::size_t cap) {
  return {sigma_closure(family, cap), delta_closure(family, cap)};
}

PropertyReport check_sigma_compatibility(const FiniteRing& ring, const MonoidClosure& sigma,
                                         const ScanOptions& opts) {
  const std::uint64_t n = ring.size();
  const Elem zero = ring.zero();
  const auto res = kernels::scan(sigma.size() * n * n, opts, [&](std::uint64_t k) {
    const auto& s = sigma.maps[k / (n * n)];
    const Elem a = static_cast<Elem>((k / n) % n), b = static_cast<Elem>(k % n);
    return (ring.mul(a, s(b)) == zero) != (ring.mul(a, b) == zero);
  });
  PropertyReport r;
  r.property = "sigma_compatible";
  r.work_count = res.work_count;
  r.verdict = res.sampled ? Verdict::holds_at_bound : Verdict::holds;
  if (res.sampled) r.notes.push_back("sampled");
  r.notes.push_back("sigma closure size " + std::to_string(sigma.size()));
  if (res.index) {
    const auto k = *res.index;
    r.verdict = Verdict::fails;
    r.witness = MapWitness{"a*sigma^alpha(b)=0 <=> ab=0", sigma.alphas[k / (n * n)], std::nullopt,
                           {static_cast<Elem>((k / n) % n), static_cast<Elem>(k % n)}};
  }
  return r;
}

PropertyReport check_delta_compatibility(const FiniteRing& ring, const MonoidClosure& delta,
                                         const ScanOptions& opts) {
  const std::uint64_t n = ring.size();
  const Elem zero = ring.zero();
  const auto res = kernels::scan(delta.size() * n * n, opts, [&](std::uint64_t k) {
    const auto& d = delta.maps[k / (n * n)];
    const Elem a = static_cast<Elem>((k / n) % n), b = static_cast<Elem>(k % n);
    return ring.mul(a, b) == zero && ring.mul(a, d(b)) != zero;
  });
  PropertyReport r;
  r.property = "delta_compatible";
  r.work_count = res.work_count;
  r.verdict = res.sampled ? Verdict::holds_at_bound : Verdict::holds;
  if (res.sampled) r.notes.push_back("sampled");
  r.notes.push_back("delta closure size " + std::to_string(delta.size()));
  if (res.index) {
    const auto k = *res.index;
    r.verdict = Verdict::fails;
    r.witness = MapWitness{"ab=0 => a*delta^beta(b)=0", std::nullopt, delta.words[k / (n * n)],
                           {static_cast<Elem>((k / n) % n), static_cast<Elem>(k % n)}};
  }
  return r;
}

PropertyReport CompatibilityResult::combined() const {
  PropertyReport r;
  if (!sigma.ok()) {
    r = sigma;
  } else if (!delta.ok()) {
    r = delta;
  } else {
    r.verdict = (sigma.verdict == Verdict::holds && delta.verdict == Verdict::holds) ? Verdict::holds
                                                                                     : Verdict::holds_at_bound;
    r.work_count = sigma.work_count + delta.work_count;
    r.notes = sigma.notes;
    r.notes.insert(r.notes.end(), delta.notes.begin(), delta.notes.end());
  }
  r.property = "sigma_delta_compatible";
  return r;
}

CompatibilityResult check_compatibility(const MapFamily& family, const ScanOptions& opts, std::size_t cap) {
  const auto& ring = *family.ring;
  CompatibilityResult out;
  auto at_cap = [](const char* name, const std::string& why) {
    PropertyReport r;
    r.property = name;
    r.verdict = Verdict::undecided_at_cap;
    r.notes.push_back(why);
    return r;
  };
  std::optional<MonoidClosure> sig, del;
  try {
    sig = sigma_closure(family, cap);
    out.sigma = check_sigma_compatibility(ring, *sig, opts);
  } catch (const ClosureCapExceeded& e) {
    out.sigma = at_cap("sigma_compatible", e.what());
  }
  try {
    del = delta_closure(family, cap);
    out.delta = check_delta_compatibility(ring, *del, opts);
  } catch (const ClosureCapExceeded& e) {
    out.delta = at_cap("delta_compatible", e.what());
  }
  if (sig && del) out.closures = ClosurePair{std::move(*sig), std::move(*del)};
  return out;
}

PropertyReport check_sigma_rigid(const FiniteRing& ring, const MonoidClosure& sigma, const ScanOptions& opts) {
  const std::uint64_t n = ring.size();
  const Elem zero = ring.zero();
  const auto res = kernels::scan(sigma.size() * n, opts, [&](std::uint64_t k) {
    const Elem a = static_cast<Elem>(k % n);
    return a != zero && ring.mul(a, sigma.maps[k / n](a)) == zero;
  });
  PropertyReport r;
  r.property = "sigma_rigid";
  r.work_count = res.work_count;
  r.verdict = res.sampled ? Verdict::holds_at_bound : Verdict::holds;
  if (res.sampled) r.notes.push_back("sampled");
  if (res.index) {
    r.verdict = Verdict::fails;
    r.witness = MapWitness{"a*sigma^alpha(a)=0 with a!=0", sigma.alphas[*res.index / n], std::nullopt,
                           {static_cast<Elem>(*res.index % n)}};
  }
  return r;
}

PropertyReport check_sigma_rigid(const MapFamily& family, const ScanOptions& opts, std::size_t cap) {
  try {
    return check_sigma_rigid(*family.ring, sigma_closure(family, cap), opts);
  } catch (const ClosureCapExceeded& e) {
    PropertyReport r;
    r.property = "sigma_rigid";
    r.verdict = Verdict::undecided_at_cap;
    r.notes.push_back(e.what());
    return r;
  }
}

bool map_witness_reproduces(const FiniteRing& ring, const MapFamily& family, const PropertyReport& report) {
  if (report.verdict != Verdict::fails) return !report.witness.has_value();
  if (!report.witness) return false;
  const auto* w = std::get_if<MapWitness>(&*report.witness);
  if (w == nullptr) return false;
  const Elem zero = ring.zero();
  const bool sigma_side = w->sigma_alpha.has_value();
  const RingMap m = sigma_side ? sigma_power(family, *w->sigma_alpha) : apply_word(ring, family, *w->delta_word);
  if (report.property == "sigma_rigid") {
    if (w->elems.size() != 1) return false;
    const Elem a = w->elems[0];
    return a != zero && ring.mul(a, m(a)) == zero;
  }
  if (w->elems.size() != 2) return false;
  const Elem a = w->elems[0], b = w->elems[1];
  if (sigma_side) return (ring.mul(a, m(b)) == zero) != (ring.mul(a, b) == zero);
  return ring.mul(a, b) == zero && ring.mul(a, m(b)) != zero;
}

}  // namespace skewpbw
