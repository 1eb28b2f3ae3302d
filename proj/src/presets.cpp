#include "skewpbw/presets.hpp"

namespace skewpbw::presets {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Elem mod(std::int64_t v, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<Elem>(((v % m) + m) % m);
}

struct Term {
  std::int64_t coeff;
  std::vector<std::uint32_t> exps;
};

SkewPoly poly(const FiniteRing& ring, std::size_t n, std::uint32_t p, const std::vector<Term>& terms) {
  SkewPoly f(n);
  for (const auto& t : terms) f.add_term(ring, Monomial{t.exps}, mod(t.coeff, p));
  return f;
}

std::int64_t get(const Params& params, const std::string& key, std::int64_t fallback) {
  const auto it = params.ints.find(key);
  return it == params.ints.end() ? fallback : it->second;
}

std::uint32_t prime_param(const Params& params, const std::string& key, std::int64_t fallback) {
  const auto p = get(params, key, fallback);
  if (!is_prime(p) || p > 65521) throw InvalidParameter(key + " must be a prime below 65536");
  return static_cast<std::uint32_t>(p);
}

}  // namespace

ExtensionSpec constant(std::shared_ptr<const FiniteRing> ring, std::size_t n) {
  ExtensionSpec spec;
  spec.family = MapFamily::trivial(ring, n);
  spec.ring = std::move(ring);
  spec.order = MonomialOrder::deglex(n);
  return spec;
}

ExtensionSpec quantum_weyl(std::uint32_t p, std::int64_t a, std::int64_t b) {
  if (!is_prime(p)) throw InvalidParameter("quantum_weyl needs a prime p");
  ExtensionSpec spec = constant(FiniteRing::build(RingDescriptor::modular(p)), 4);
  const auto& R = *spec.ring;
  spec.variable_names = {"x1", "x2", "d1", "d2"};
  // Smallest to largest: x1 < d2 < x2 < d1. Every tail is then below its
  // leading word, in particular b d2^2 below d1 d2.
  spec.order = MonomialOrder(OrderKind::deglex, {0, 3, 1, 2});
  const Elem one = R.one();
  auto rel = [&](std::size_t i, std::size_t j, std::vector<Term> tail) {
    spec.relations[{i, j}] = Relation{one, poly(R, 4, p, tail)};
  };
  rel(0, 1, {{-a, {2, 0, 0, 0}}});
  rel(0, 2, {{1, {0, 0, 0, 0}}, {a, {1, 0, 0, 1}}});
  rel(0, 3, {});
  rel(1, 2, {{-a, {1, 0, 1, 0}}, {-a * b, {1, 0, 0, 1}}, {b, {0, 1, 0, 1}}});
  rel(1, 3, {{1, {0, 0, 0, 0}}, {-b, {1, 0, 0, 1}}});
  rel(2, 3, {{b, {0, 0, 0, 2}}});
  return spec;
}

ExtensionSpec jordan_plane(std::uint32_t p, std::int64_t a) {
  if (!is_prime(p)) throw InvalidParameter("jordan_plane needs a prime p");
  ExtensionSpec spec = constant(FiniteRing::build(RingDescriptor::modular(p)), 2);
  spec.relations[{0, 1}] = Relation{spec.ring->one(), poly(*spec.ring, 2, p, {{-a, {2, 0}}})};
  return spec;
}

ExtensionSpec swap_ore(std::uint32_t q) {
  if (q < 2) throw InvalidParameter("swap_ore needs q >= 2");
  auto ring = FiniteRing::build(RingDescriptor::product({RingDescriptor::modular(q), RingDescriptor::modular(q)}));
  ExtensionSpec spec = constant(ring, 1);
  spec.variable_names = {"x"};
  spec.family.sigmas[0] = builders::coordinate_swap(*ring);
  return spec;
}

ExtensionSpec differential_ore(std::uint32_t p) {
  if (p != 2) throw InvalidParameter("d/dt is a derivation of F_p[t]/(t^2) only for p = 2");
  auto ring = FiniteRing::build(RingDescriptor::dual_numbers(p));
  ExtensionSpec spec = constant(ring, 1);
  spec.variable_names = {"x"};
  spec.family.deltas[0] = builders::formal_derivative(*ring);
  return spec;
}

ExtensionSpec build(std::string_view name, const Params& params) {
  auto check_keys = [&](std::initializer_list<const char*> allowed, bool ring_allowed) {
    for (const auto& [k, v] : params.ints) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) throw InvalidParameter("preset '" + std::string(name) + "' has no parameter '" + k + "'");
    }
    if (params.ring && !ring_allowed) {
      throw InvalidParameter("preset '" + std::string(name) + "' has a fixed base ring");
    }
  };

  if (name == "constant") {
    check_keys({"n"}, true);
    const auto n = get(params, "n", 1);
    if (n < 0 || n > 16) throw InvalidParameter("constant needs 0 <= n <= 16");
    return constant(FiniteRing::build(params.ring.value_or(RingDescriptor::modular(2))),
                    static_cast<std::size_t>(n));
  }
  if (name == "quantum_weyl") {
    check_keys({"p", "a", "b"}, false);
    return quantum_weyl(prime_param(params, "p", 5), get(params, "a", 0), get(params, "b", 0));
  }
  if (name == "jordan_plane") {
    check_keys({"p", "a"}, false);
    return jordan_plane(prime_param(params, "p", 3), get(params, "a", 1));
  }
  if (name == "swap_ore") {
    check_keys({"q"}, false);
    const auto q = get(params, "q", 2);
    if (q < 2 || q > 1024) throw InvalidParameter("swap_ore needs 2 <= q <= 1024");
    return swap_ore(static_cast<std::uint32_t>(q));
  }
  if (name == "differential_ore") {
    check_keys({"p"}, false);
    const auto p = get(params, "p", 2);
    if (p != 2) throw InvalidParameter("d/dt is a derivation of F_p[t]/(t^2) only for p = 2");
    return differential_ore(2);
  }
  throw UnknownPreset("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> names() {
  return {"constant", "quantum_weyl", "jordan_plane", "swap_ore", "differential_ore"};
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto with_ring = [](RingDescriptor d, std::int64_t n) {
      Params p;
      p.ring = std::move(d);
      p.ints["n"] = n;
      return p;
    };
    auto ints = [](std::map<std::string, std::int64_t> m) { return Params{std::move(m), std::nullopt}; };
    using D = RingDescriptor;
    return std::vector<CatalogEntry>{
        {"constant/Z4/n2", "constant", "commuting variables over Z/4", with_ring(D::modular(4), 2)},
        {"constant/Z6/n2", "constant", "commuting variables over Z/6", with_ring(D::modular(6), 2)},
        {"constant/F2xF2/n2", "constant", "commuting variables over F2 x F2",
         with_ring(D::product({D::modular(2), D::modular(2)}), 2)},
        {"constant/M2F2/n1", "constant", "one commuting variable over M2(F2)", with_ring(D::matrix(2, 2), 1)},
        {"constant/F2/n1", "constant", "F2[x]", with_ring(D::modular(2), 1)},
        {"quantum_weyl/F5/a0b0", "quantum_weyl", "A_2(J_{0,0}) over F5", ints({{"p", 5}, {"a", 0}, {"b", 0}})},
        {"quantum_weyl/F3/a1b1", "quantum_weyl", "A_2(J_{1,1}) over F3", ints({{"p", 3}, {"a", 1}, {"b", 1}})},
        {"jordan_plane/F3/a1", "jordan_plane", "Jordan plane over F3", ints({{"p", 3}, {"a", 1}})},
        {"swap_ore/F2", "swap_ore", "x r = swap(r) x over F2 x F2", ints({{"q", 2}})},
        {"differential_ore/F2", "differential_ore", "x r = r x + dr/dt over F2[t]/(t^2)", ints({{"p", 2}})},
    };
  }();
  return entries;
}

}  // namespace skewpbw::presets
