#pragma once

#include <string>

#include "skewpbw/cli/poly_parse.hpp"
#include "skewpbw/extension.hpp"
#include "skewpbw/nilarmendariz.hpp"
#include "skewpbw/presets.hpp"

namespace skewpbw::testing {

inline std::shared_ptr<const FiniteRing> ring_of(const RingDescriptor& d) { return FiniteRing::build(d); }

inline std::shared_ptr<const FiniteRing> z(std::uint32_t n) { return ring_of(RingDescriptor::modular(n)); }

inline std::shared_ptr<const FiniteRing> f2xf2() {
  return ring_of(RingDescriptor::product({RingDescriptor::modular(2), RingDescriptor::modular(2)}));
}

inline std::shared_ptr<const FiniteRing> m2f2() { return ring_of(RingDescriptor::matrix(2, 2)); }

inline std::shared_ptr<const FiniteRing> dual2() { return ring_of(RingDescriptor::dual_numbers(2)); }

inline Extension::Ptr constant_ext(std::shared_ptr<const FiniteRing> ring, std::size_t n) {
  return Extension::create(presets::constant(std::move(ring), n));
}

inline Extension::Ptr preset(std::string_view name, presets::Params params = {}) {
  return Extension::create(presets::build(name, params));
}

inline Extension::Ptr qweyl(std::uint32_t p, std::int64_t a, std::int64_t b) {
  return Extension::create(presets::quantum_weyl(p, a, b));
}

inline SkewPoly poly(const Extension& ext, std::string_view text) { return cli::parse_poly(ext, text); }

inline Elem el(const FiniteRing& ring, std::string_view text) { return ring.parse(text); }

}  // namespace skewpbw::testing
