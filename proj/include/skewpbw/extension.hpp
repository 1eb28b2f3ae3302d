#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/finring.hpp"
#include "skewpbw/poly.hpp"
#include "skewpbw/ringmaps.hpp"

namespace skewpbw {

/// x_j x_i = c x_i x_j + tail, for i < j.
struct Relation {
  Elem c = 0;
  SkewPoly tail;
};

struct ExtensionSpec {
  std::shared_ptr<const FiniteRing> ring;
  MapFamily family;
  MonomialOrder order;
  std::vector<std::string> variable_names;
  /// Keyed by (i, j) with i < j. Missing pairs commute (c = 1, tail 0).
  std::map<std::pair<std::size_t, std::size_t>, Relation> relations;

  std::size_t nvars() const noexcept { return family.size(); }
};

struct LeadingData {
  bool zero = true;  // lm(0) = 0, lc(0) = 0
  Monomial lm;
  Elem lc = 0;
  std::uint64_t deg = 0;
};

struct ValidationOptions {
  /// Rings above this size get a sampled scalar desk-check.
  std::uint32_t scalar_cap = 256;
  std::uint64_t scalar_samples = 256;
  std::uint64_t seed = 0;
};

struct ValidationReport {
  std::uint64_t triples_checked = 0;
  std::uint64_t scalar_checks = 0;
  bool scalar_sampled = false;
};

inline constexpr std::uint64_t kDefaultRewriteBudget = 1000000;

class Extension {
 public:
  using Ptr = std::shared_ptr<const Extension>;

  /// Fills defaults and runs validate(). Throws the validation errors.
  static Ptr create(ExtensionSpec spec, const ValidationOptions& opts = {});
  /// Fills defaults only; for tests that need a broken presentation.
  static Ptr create_unchecked(ExtensionSpec spec);

  /// Centrality and unit checks on the constants, the map axioms, tail
  /// order, then the overlap desk-check. Throws on the first failure.
  ValidationReport validate(const ValidationOptions& opts = {}) const;

  const ExtensionSpec& spec() const noexcept { return spec_; }
  const FiniteRing& ring() const noexcept { return *spec_.ring; }
  const MapFamily& family() const noexcept { return spec_.family; }
  const MonomialOrder& order() const noexcept { return spec_.order; }
  std::size_t nvars() const noexcept { return spec_.nvars(); }
  const std::vector<std::string>& variable_names() const noexcept { return spec_.variable_names; }
  const Relation& relation(std::size_t i, std::size_t j) const { return spec_.relations.at({i, j}); }

  SkewPoly zero() const { return SkewPoly(nvars()); }
  SkewPoly one() const { return constant(ring().one()); }
  SkewPoly constant(Elem r) const;
  SkewPoly variable(std::size_t i) const;
  SkewPoly monomial(const Monomial& m, Elem c) const;

  SkewPoly add(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly sub(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly neg(const SkewPoly& f) const;
  /// r * f (left scalar multiple).
  SkewPoly scale(Elem r, const SkewPoly& f) const;

  /// sigma_i(r) x_i + delta_i(r)
  SkewPoly x_times_r(std::size_t i, Elem r) const;
  /// x^alpha r evaluated through the closed-form sum of sigma / delta
  /// composites. Uses no commutation relation.
  SkewPoly x_alpha_times_r(const Monomial& alpha, Elem r) const;

  /// Product by ordered rewriting. Throws RewriteBudgetExceeded.
  SkewPoly mul(const SkewPoly& f, const SkewPoly& g, std::uint64_t budget = kDefaultRewriteBudget) const;
  SkewPoly pow(const SkewPoly& f, std::uint64_t k) const;

  LeadingData leading(const SkewPoly& f) const;

  /// Ascending order, e.g. "1 + 2*x1 + x1*d1".
  std::string format(const SkewPoly& f) const;
  std::string format_monomial(const Monomial& m) const;

 private:
  explicit Extension(ExtensionSpec spec) : spec_(std::move(spec)) {}

  using Word = std::vector<std::uint32_t>;
  using WordPoly = std::map<Word, Elem>;

  void reduce(WordPoly& work, SkewPoly& out, std::uint64_t& budget) const;
  WordPoly push_left(const Word& prefix, Elem r) const;
  static void accumulate(const FiniteRing& ring, WordPoly& p, Word w, Elem c);

  ExtensionSpec spec_;
};

}  // namespace skewpbw
