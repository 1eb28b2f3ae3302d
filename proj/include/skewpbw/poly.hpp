#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "skewpbw/finring.hpp"

namespace skewpbw {

/// A PBW monomial x^alpha = x_1^alpha_1 ... x_n^alpha_n.
struct Monomial {
  std::vector<std::uint32_t> exps;

  static Monomial one(std::size_t n) { return {std::vector<std::uint32_t>(n, 0)}; }
  static Monomial var(std::size_t n, std::size_t i, std::uint32_t power = 1) {
    Monomial m = one(n);
    m.exps.at(i) = power;
    return m;
  }

  std::size_t nvars() const noexcept { return exps.size(); }
  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  bool is_one() const noexcept { return degree() == 0; }

  Monomial operator+(const Monomial& o) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] += o.exps[i];
    return m;
  }

  auto operator<=>(const Monomial&) const = default;
};

enum class OrderKind { deglex, lex, degrevlex };

const char* order_kind_name(OrderKind k);

/// Total order on N^n. `precedence` lists variable indices from the
/// smallest variable to the largest.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);

  /// Default: deglex with x_1 < x_2 < ... < x_n.
  static MonomialOrder deglex(std::size_t n);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  OrderKind kind_ = OrderKind::deglex;
  std::vector<std::size_t> precedence_;
};

/// Normal-form element of a skew PBW extension: monomial -> nonzero
/// coefficient. Arithmetic lives on Extension; this type only keeps the
/// representation normalized.
class SkewPoly {
 public:
  using TermMap = std::map<Monomial, Elem>;

  SkewPoly() = default;
  explicit SkewPoly(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  Elem coeff(const Monomial& m, Elem zero) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
  }

  /// this += c * m
  void add_term(const FiniteRing& ring, const Monomial& m, Elem c) {
    if (c == ring.zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = ring.add(it->second, c);
    if (it->second == ring.zero()) terms_.erase(it);
  }

  /// Monomials sorted ascending in `order`.
  std::vector<Monomial> support(const MonomialOrder& order) const;

  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

}  // namespace skewpbw
