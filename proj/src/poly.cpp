#include "skewpbw/poly.hpp"

#include <algorithm>
#include <numeric>

namespace skewpbw {

const char* order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::deglex: return "deglex";
    case OrderKind::lex: return "lex";
    case OrderKind::degrevlex: return "degrevlex";
  }
  return "?";
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw InvalidParameter("monomial order precedence must be a permutation of the variables");
  }
}

MonomialOrder MonomialOrder::deglex(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return {OrderKind::deglex, std::move(p)};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ != OrderKind::lex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  if (kind_ == OrderKind::degrevlex) {
    // Smallest variable first; the smaller exponent wins.
    for (std::size_t v : precedence_) {
      if (a.exps[v] != b.exps[v]) return b.exps[v] <=> a.exps[v];
    }
    return std::strong_ordering::equal;
  }
  for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
    if (a.exps[*it] != b.exps[*it]) return a.exps[*it] <=> b.exps[*it];
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> SkewPoly::support(const MonomialOrder& order) const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return out;
}

}  // namespace skewpbw
