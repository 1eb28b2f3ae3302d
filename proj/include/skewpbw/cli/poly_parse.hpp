#pragma once

#include <string_view>

#include "skewpbw/extension.hpp"

namespace skewpbw::cli {

/// expr := term (('+' | '-') term)*, term := factor ('*'? factor)*,
/// factor := atom ('^' int)?, atom := variable | coefficient | '(' expr ')'.
/// Products are evaluated with the extension's multiplication, so any
/// variable order is accepted. Throws ParseError, UnknownVariable,
/// BadCoefficient (column counted from 1, line always 1).
SkewPoly parse_poly(const Extension& ext, std::string_view text);

/// Normal-form input only: every term is coefficient? followed by variables
/// in PBW order, each at most once. Needs no multiplication, so it can read
/// relation tails before the extension is usable.
SkewPoly parse_normal_form(const FiniteRing& ring, const std::vector<std::string>& variables,
                           std::string_view text);

/// Coefficient token; bare integers k mean k * 1 when the ring has no
/// integer display syntax.
Elem parse_coefficient(const FiniteRing& ring, std::string_view text);

}  // namespace skewpbw::cli
