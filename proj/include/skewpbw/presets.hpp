#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewpbw/extension.hpp"

namespace skewpbw::presets {

struct Params {
  std::map<std::string, std::int64_t> ints;
  std::optional<RingDescriptor> ring;
};

/// sigma_i = id, delta_i = 0, all variables commute.
ExtensionSpec constant(std::shared_ptr<const FiniteRing> ring, std::size_t n);
/// A_2(J_{a,b}) over F_p in the variables x1, x2, d1, d2.
ExtensionSpec quantum_weyl(std::uint32_t p, std::int64_t a, std::int64_t b);
/// x2 x1 = x1 x2 - a x1^2 over F_p.
ExtensionSpec jordan_plane(std::uint32_t p, std::int64_t a);
/// One variable over Z/q x Z/q with sigma the coordinate swap.
ExtensionSpec swap_ore(std::uint32_t q = 2);
/// One variable over F_p[t]/(t^2) with delta = d/dt. Only p = 2 gives a
/// sigma-derivation.
ExtensionSpec differential_ore(std::uint32_t p = 2);

/// By name: constant (ring, n), quantum_weyl (p, a, b), jordan_plane (p, a),
/// swap_ore (q), differential_ore (p). Throws UnknownPreset /
/// InvalidParameter.
ExtensionSpec build(std::string_view name, const Params& params = {});

std::vector<std::string> names();

struct CatalogEntry {
  std::string label;
  std::string name;
  std::string description;
  Params params;
};

/// The instances the test-suite and the `presets` command walk through.
const std::vector<CatalogEntry>& catalog();

}  // namespace skewpbw::presets
