#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "skewpbw/finring.hpp"
#include "skewpbw/report.hpp"

namespace skewpbw {

enum class MapKind { endomorphism, sigma_derivation, plain };

/// Self-map of a finite ring stored as a full table.
struct RingMap {
  std::vector<Elem> table;
  MapKind kind = MapKind::plain;

  Elem operator()(Elem r) const { return table[r]; }
  bool is_identity() const;
  bool is_zero(Elem zero) const;
  friend bool operator==(const RingMap& a, const RingMap& b) { return a.table == b.table; }
};

/// outer o inner
RingMap compose(const RingMap& outer, const RingMap& inner);

/// Checks the kind-specific axioms exhaustively. For sigma-derivations the
/// paired endomorphism must be supplied. Throws AxiomViolation naming the
/// failed law and a witness.
void validate_map(const FiniteRing& ring, const RingMap& map, const RingMap* sigma = nullptr);

namespace builders {
RingMap identity(const FiniteRing& ring);
RingMap zero(const FiniteRing& ring);
/// (x, y) -> (y, x) on a product of two equal factors.
RingMap coordinate_swap(const FiniteRing& ring);
/// Raises every matrix / product / modular entry to the p-th power, p the
/// base modulus.
RingMap frobenius(const FiniteRing& ring);
/// a + b t -> b on F_2[t]/(t^2) (a ring built with dual_numbers).
RingMap formal_derivative(const FiniteRing& ring);
/// r -> c r - sigma(r) c.
RingMap inner_derivation(const FiniteRing& ring, const RingMap& sigma, Elem c);
}  // namespace builders

/// Sigma = {sigma_1..sigma_n}, Delta = {delta_1..delta_n}; delta_i is a
/// sigma_i-derivation.
struct MapFamily {
  std::shared_ptr<const FiniteRing> ring;
  std::vector<RingMap> sigmas;
  std::vector<RingMap> deltas;

  /// sigma_i = id, delta_i = 0.
  static MapFamily trivial(std::shared_ptr<const FiniteRing> ring, std::size_t n);

  std::size_t size() const noexcept { return sigmas.size(); }
  void validate() const;
};

/// sigma_1^a1 o ... o sigma_n^an
RingMap sigma_power(const MapFamily& family, const Monomial& alpha);

struct MonoidClosure {
  std::vector<RingMap> maps;
  /// Sigma closure: alpha per map. Delta closure: generator word per map
  /// (word w means delta_{w[0]} o delta_{w[1]} o ...).
  std::vector<Monomial> alphas;
  std::vector<std::vector<std::size_t>> words;

  std::size_t size() const noexcept { return maps.size(); }
  std::optional<std::size_t> find(const RingMap& m) const;
};

struct ClosurePair {
  MonoidClosure sigma;
  MonoidClosure delta;
};

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// sigma closure = { sigma^alpha : alpha in N^n }; delta closure = every
/// composite of one or more delta_i. Throws ClosureCapExceeded.
MonoidClosure sigma_closure(const MapFamily& family, std::size_t cap = kDefaultClosureCap);
MonoidClosure delta_closure(const MapFamily& family, std::size_t cap = kDefaultClosureCap);
ClosurePair compatibility_closure(const MapFamily& family, std::size_t cap = kDefaultClosureCap);

/// a sigma^alpha(b) = 0 <=> ab = 0 for every closure member.
PropertyReport check_sigma_compatibility(const FiniteRing& ring, const MonoidClosure& sigma,
                                         const ScanOptions& opts = {});
/// ab = 0 => a delta^beta(b) = 0 for every closure member.
PropertyReport check_delta_compatibility(const FiniteRing& ring, const MonoidClosure& delta,
                                         const ScanOptions& opts = {});

struct CompatibilityResult {
  PropertyReport sigma;
  PropertyReport delta;
  std::optional<ClosurePair> closures;  // absent when the cap was hit

  bool compatible() const noexcept { return sigma.ok() && delta.ok(); }
  /// Combined (Sigma, Delta) report: the first failure, sigma first.
  PropertyReport combined() const;
};

CompatibilityResult check_compatibility(const MapFamily& family, const ScanOptions& opts = {},
                                        std::size_t cap = kDefaultClosureCap);

/// a sigma^alpha(a) = 0 => a = 0 for every alpha.
PropertyReport check_sigma_rigid(const MapFamily& family, const ScanOptions& opts = {},
                                 std::size_t cap = kDefaultClosureCap);
PropertyReport check_sigma_rigid(const FiniteRing& ring, const MonoidClosure& sigma, const ScanOptions& opts = {});

/// Recomputes a compatibility / rigidity witness against its law.
bool map_witness_reproduces(const FiniteRing& ring, const MapFamily& family, const PropertyReport& report);

}  // namespace skewpbw
