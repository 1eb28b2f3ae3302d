#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewpbw/extension.hpp"
#include "skewpbw/report.hpp"

namespace skewpbw {

/// Facts about one extension that the checkers keep asking for.
struct Analysis {
  Extension::Ptr ext;
  ScanOptions opts;
  std::vector<bool> nil;
  /// Largest nilpotency index over nil(R).
  std::uint32_t max_nil_index = 1;
  RingClassVerdict reversible;
  CompatibilityResult compat;
  PropertyReport rigid;

  static Analysis run(Extension::Ptr ext, const ScanOptions& opts = {});

  const FiniteRing& ring() const { return ext->ring(); }
  /// R reversible and (Sigma, Delta)-compatible, both decided exactly.
  bool theorem_hypotheses() const;
};

enum class NilMethod { coefficient_criterion, power_oracle, both_agree };

const char* nil_method_name(NilMethod m);

struct NilPolyVerdict {
  bool nilpotent = true;
  NilMethod method = NilMethod::power_oracle;
  std::uint64_t exponent_used = 0;
  /// "not nilpotent" only up to the oracle bound, outside the hypotheses
  /// that make the bound exact.
  bool at_oracle_bound = false;
};

/// (m+1) k + 1 for f with m+1 terms.
std::uint64_t oracle_bound(const Analysis& an, const SkewPoly& f);

NilPolyVerdict is_nilpotent_poly_oracle(const Analysis& an, const SkewPoly& f);
/// Throws HypothesisNotVerified unless theorem_hypotheses().
NilPolyVerdict is_nilpotent_poly_criterion(const Analysis& an, const SkewPoly& f);
/// Runs both and throws std::logic_error when they disagree.
NilPolyVerdict is_nilpotent_poly_checked(const Analysis& an, const SkewPoly& f);

enum class ArmendarizVariant { skew_pi, sigma_delta_skew, sigma_skew, skew };

/// CLI spelling: skew-pi, sigma-delta-skew, sigma-skew, skew.
const char* variant_name(ArmendarizVariant v);
std::optional<ArmendarizVariant> parse_variant(std::string_view name);
/// Report property name, e.g. "skew_pi_armendariz".
std::string variant_property(ArmendarizVariant v);

/// All monomials of total degree <= d, ascending in the extension order.
SearchBound degree_bound(const Extension& ext, std::uint32_t d);

struct ArmendarizOptions {
  bool parallel = true;
  std::uint64_t seed = 0;
  /// Above this many (f, g) pairs, or |R| > 16, the scan samples.
  std::uint64_t max_pairs = 1ull << 24;
  std::uint64_t samples = 4096;
};

/// Number of (f, g) pairs the full scan over `bound` would visit.
long double pair_space(const Analysis& an, const SearchBound& bound);

/// Pairs are visited in coefficient-index order (a_0, ..., a_s, b_0, ...,
/// b_s), a_0 most significant; the first violation is the witness.
PropertyReport check_armendariz(const Analysis& an, ArmendarizVariant variant, SearchBound bound,
                                const ArmendarizOptions& opts = {});

/// Recomputes f g, the premise and the offending product of a failing
/// Armendariz report.
bool armendariz_witness_reproduces(const Analysis& an, ArmendarizVariant variant, const PropertyReport& report);

/// Two reports: nil stability under sigma/delta composites (needs
/// reversible) and reflection of nilpotent products through sigma.
/// Throws HypothesisNotVerified when R is not (Sigma, Delta)-compatible.
std::vector<PropertyReport> verify_lemma_nil_stability(const Analysis& an);
bool lemma_witness_reproduces(const Analysis& an, const PropertyReport& report);

/// Ring-class verdict as a report (property = class name).
PropertyReport ring_class_report(const FiniteRing& ring, const RingClassVerdict& v);

enum class ImplicationStatus { vacuous, confirmed, violation, search_only, undecided };

const char* implication_status_name(ImplicationStatus s);

struct ImplicationReport {
  std::string name;
  ImplicationStatus status = ImplicationStatus::vacuous;
  std::vector<PropertyReport> antecedents;
  std::vector<PropertyReport> consequents;
};

std::vector<ImplicationReport> verify_implication_suite(const Analysis& an, const SearchBound& bound,
                                                        const ArmendarizOptions& opts = {});

}  // namespace skewpbw
