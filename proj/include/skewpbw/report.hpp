#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewpbw/poly.hpp"

namespace skewpbw {

enum class Verdict {
  holds,             // exact decision over the full finite space
  holds_at_bound,    // no counterexample within the stated search bound
  fails,             // witness attached
  undecided_at_cap,  // a configured cap stopped the decision
  not_applicable,    // a required hypothesis was not established
};

const char* verdict_name(Verdict v);

struct ElementWitness {
  std::string law;
  std::vector<Elem> elems;
};

/// Witness involving maps from the sigma / delta closures.
struct MapWitness {
  std::string law;
  std::optional<Monomial> sigma_alpha;            // sigma^alpha
  std::optional<std::vector<std::size_t>> delta_word;  // delta_{w0} o delta_{w1} o ...
  std::vector<Elem> elems;
};

/// Witness for the Armendariz-type checkers: the pair (f, g), the two
/// monomials X_i, Y_j picked out of f and g, and the offending value.
struct PolyWitness {
  SkewPoly f;
  SkewPoly g;
  Monomial left;
  Monomial right;
  Elem product = 0;
  /// Set when the offending value is a polynomial (a_i X_i b_j Y_j).
  std::optional<SkewPoly> offending;
};

using Witness = std::variant<ElementWitness, MapWitness, PolyWitness>;

enum class ScopeKind { all, sampled };

struct CoefficientScope {
  ScopeKind kind = ScopeKind::all;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Finite search space for the Armendariz quantifiers.
struct SearchBound {
  /// Sorted ascending in the extension's monomial order.
  std::vector<Monomial> support;
  CoefficientScope scope;
};

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::holds;
  std::optional<Witness> witness;
  std::uint64_t work_count = 0;
  std::optional<SearchBound> bound;
  std::vector<std::string> notes;

  bool ok() const noexcept { return verdict == Verdict::holds || verdict == Verdict::holds_at_bound; }
};

}  // namespace skewpbw
