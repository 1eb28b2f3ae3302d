#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skewpbw/errors.hpp"
#include "skewpbw/kernels.hpp"

namespace skewpbw {

/// Index of an element in [0, ring.size()).
using Elem = std::uint32_t;

struct RingDescriptor;

struct ModularDesc {
  std::uint32_t modulus = 1;
};

struct ProductDesc {
  std::vector<RingDescriptor> factors;
};

struct MatrixDesc {
  std::uint32_t dim = 1;
  std::uint32_t modulus = 2;
};

struct TablesDesc {
  std::uint32_t size = 0;
  std::vector<std::vector<Elem>> add;
  std::vector<std::vector<Elem>> mul;
  Elem zero = 0;
  Elem one = 0;
  /// Optional display names, one per element.
  std::vector<std::string> names;
};

struct RingDescriptor {
  std::variant<ModularDesc, ProductDesc, MatrixDesc, TablesDesc> body;

  static RingDescriptor modular(std::uint32_t n) { return {ModularDesc{n}}; }
  static RingDescriptor product(std::vector<RingDescriptor> factors) { return {ProductDesc{std::move(factors)}}; }
  static RingDescriptor matrix(std::uint32_t k, std::uint32_t modulus) { return {MatrixDesc{k, modulus}}; }
  static RingDescriptor tables(TablesDesc t) { return {std::move(t)}; }
  /// F_p[t]/(t^2) as explicit tables; element a + b t has index a + b p.
  static RingDescriptor dual_numbers(std::uint32_t p);
};

enum class Backend { modular, product, matrix, tables };

const char* backend_name(Backend b);

struct RingLimits {
  /// Rings up to this size get a full triple-by-triple axiom check.
  std::uint32_t axiom_cap = 256;
  /// Composite backends materialize N x N tables up to this size.
  std::uint32_t table_cap = 1024;
  std::uint64_t max_size = 1ull << 20;
  std::uint64_t axiom_samples = 200000;
  std::uint64_t seed = 0;
};

struct AxiomCheck {
  std::uint64_t triples_checked = 0;
  bool sampled = false;
};

/// A finite unital ring. Immutable after construction; safe to share across
/// threads.
class FiniteRing {
 public:
  /// Builds the ring and runs the axiom check. Throws AxiomViolation or
  /// SizeCapExceeded.
  static std::shared_ptr<const FiniteRing> build(const RingDescriptor& desc, const RingLimits& limits = {});

  std::uint32_t size() const noexcept { return size_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  Backend backend() const noexcept { return backend_; }
  const RingDescriptor& descriptor() const noexcept { return desc_; }
  bool has_tables() const noexcept { return !mul_.empty(); }

  Elem add(Elem a, Elem b) const {
    return add_.empty() ? add_structural(a, b) : add_[static_cast<std::size_t>(a) * size_ + b];
  }
  Elem mul(Elem a, Elem b) const {
    return mul_.empty() ? mul_structural(a, b) : mul_[static_cast<std::size_t>(a) * size_ + b];
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b, Elem c) const { return mul(mul(a, b), c); }

  bool is_central(Elem c) const;
  std::optional<Elem> inverse(Elem c) const;
  bool is_commutative() const;

  /// Display form: integers for modular rings, tuples for products,
  /// row-major bracket lists for matrices, names or indices for tables.
  std::string format(Elem a) const;
  /// Inverse of `format`; whitespace is ignored. Throws BadCoefficient.
  Elem parse(std::string_view text) const;

  /// Component view for product and matrix backends.
  std::vector<Elem> components(Elem a) const;
  Elem from_components(const std::vector<Elem>& parts) const;
  const std::vector<std::shared_ptr<const FiniteRing>>& factors() const noexcept { return factors_; }
  std::uint32_t matrix_dim() const noexcept { return dim_; }
  std::uint32_t base_modulus() const noexcept { return modulus_; }

  /// Re-runs the ring axiom check; throws AxiomViolation.
  AxiomCheck check_axioms(const RingLimits& limits = {}) const;

 private:
  FiniteRing() = default;

  Elem add_structural(Elem a, Elem b) const;
  Elem mul_structural(Elem a, Elem b) const;
  Elem neg_structural(Elem a) const;
  Elem parse_at(std::string_view text, std::size_t& pos) const;

  RingDescriptor desc_;
  Backend backend_ = Backend::modular;
  std::uint32_t size_ = 0;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::uint32_t modulus_ = 0;  // modular, matrix base
  std::uint32_t dim_ = 0;      // matrix
  std::vector<std::shared_ptr<const FiniteRing>> factors_;
  std::vector<std::uint32_t> radix_;  // product: place value of each factor
  std::vector<Elem> add_, mul_, neg_;
  std::vector<std::string> names_;
};

bool is_nilpotent(const FiniteRing& ring, Elem a);
/// Smallest m >= 1 with a^m = 0.
std::optional<std::uint32_t> nilpotency_index(const FiniteRing& ring, Elem a);
std::vector<Elem> nil_set(const FiniteRing& ring);
/// Membership bitmap for nil_set.
std::vector<bool> nil_mask(const FiniteRing& ring);

enum class RingClass { reduced, reversible, semicommutative, ni };

const char* ring_class_name(RingClass c);
std::optional<RingClass> parse_ring_class(std::string_view name);

struct RingClassVerdict {
  RingClass ring_class = RingClass::reduced;
  bool holds = true;
  /// Elements in the order they occur in the violated law:
  /// reduced {a}; reversible {a, b}; semicommutative {a, r, b};
  /// NI {a, b} for "sum", {r, a} for "left_absorb", {a, r} for "right_absorb".
  std::vector<Elem> witness;
  std::string law;
  bool sampled = false;
  std::uint64_t work_count = 0;
};

RingClassVerdict check_ring_class(const FiniteRing& ring, RingClass c, const ScanOptions& opts = {});

/// True when the verdict's witness really violates the class definition.
bool witness_reproduces(const FiniteRing& ring, const RingClassVerdict& v);

}  // namespace skewpbw
