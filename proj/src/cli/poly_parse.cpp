#include "skewpbw/cli/poly_parse.hpp"

#include <cctype>
#include <optional>

namespace skewpbw::cli {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Elem times_one(const FiniteRing& ring, std::int64_t k) {
  Elem base = k < 0 ? ring.neg(ring.one()) : ring.one();
  std::uint64_t m = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Elem acc = ring.zero();
  while (m) {
    if (m & 1u) acc = ring.add(acc, base);
    base = ring.add(base, base);
    m >>= 1u;
  }
  return acc;
}

class Parser {
 public:
  Parser(const FiniteRing& ring, const std::vector<std::string>& vars, const Extension* ext, std::string_view text)
      : ring_(ring), vars_(vars), ext_(ext), s_(text) {}

  SkewPoly run() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    auto f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  std::size_t nvars() const { return vars_.size(); }

  SkewPoly zero() const { return SkewPoly(nvars()); }
  SkewPoly constant(Elem c) const {
    SkewPoly f(nvars());
    f.add_term(ring_, Monomial::one(nvars()), c);
    return f;
  }
  SkewPoly plus(const SkewPoly& f, const SkewPoly& g, bool negate) const {
    SkewPoly h = f;
    for (const auto& [m, c] : g.terms()) h.add_term(ring_, m, negate ? ring_.neg(c) : c);
    return h;
  }

  SkewPoly expr() {
    bool negate = false;
    if (at('-') || at('+')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    SkewPoly f = plus(zero(), term(), negate);
    while (at('+') || at('-')) {
      negate = s_[pos_] == '-';
      ++pos_;
      f = plus(f, term(), negate);
    }
    return f;
  }

  bool atom_starts() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == '[' || std::isdigit(static_cast<unsigned char>(c)) || is_ident_start(c);
  }

  SkewPoly term() {
    if (!atom_starts()) fail("expected a coefficient or a variable");
    if (!ext_) return normal_term();
    SkewPoly f = factor();
    while (true) {
      if (at('*')) {
        ++pos_;
        f = ext_->mul(f, factor());
      } else if (atom_starts()) {
        f = ext_->mul(f, factor());
      } else {
        return f;
      }
    }
  }

  std::uint32_t exponent() {
    skip();
    const std::size_t start = pos_;
    std::uint64_t k = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      k = k * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (k > 1000000) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an exponent");
    return static_cast<std::uint32_t>(k);
  }

  SkewPoly factor() {
    SkewPoly f = atom();
    if (at('^')) {
      ++pos_;
      f = ext_->pow(f, exponent());
    }
    return f;
  }

  std::size_t group_end(std::size_t from) const {
    int depth = 0;
    for (std::size_t p = from; p < s_.size(); ++p) {
      if (s_[p] == '(' || s_[p] == '[') ++depth;
      if (s_[p] == ')' || s_[p] == ']') {
        if (--depth == 0) return p + 1;
      }
    }
    throw ParseError("unbalanced bracket", 1, from + 1);
  }

  Elem coefficient_at(std::size_t from, std::size_t to) {
    try {
      return parse_coefficient(ring_, s_.substr(from, to - from));
    } catch (const BadCoefficient& e) {
      pos_ = from;
      throw BadCoefficient(std::string(e.what()) + " (column " + std::to_string(from + 1) + ")");
    }
  }

  std::optional<std::size_t> variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return i;
    }
    return std::nullopt;
  }

  // Either a variable index or a coefficient.
  struct Atom {
    std::optional<std::size_t> var;
    Elem coeff = 0;
  };

  std::optional<Atom> simple_atom() {
    skip();
    const std::size_t start = pos_;
    const char c = s_[pos_];
    if (c == '[') {
      pos_ = group_end(start);
      return Atom{std::nullopt, coefficient_at(start, pos_)};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Atom{std::nullopt, coefficient_at(start, pos_)};
    }
    if (is_ident_start(c)) {
      while (pos_ < s_.size() && is_ident(s_[pos_])) ++pos_;
      const auto name = s_.substr(start, pos_ - start);
      if (auto v = variable_index(name)) return Atom{v, 0};
      try {
        return Atom{std::nullopt, ring_.parse(name)};
      } catch (const BadCoefficient&) {
        pos_ = start;
        throw UnknownVariable("unknown variable '" + std::string(name) + "' (column " + std::to_string(start + 1) +
                              ")");
      }
    }
    if (c == '(') {
      const std::size_t end = group_end(start);
      try {
        const Elem e = ring_.parse(s_.substr(start, end - start));
        pos_ = end;
        return Atom{std::nullopt, e};
      } catch (const BadCoefficient&) {
        return std::nullopt;
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  SkewPoly atom() {
    skip();
    if (auto a = simple_atom()) {
      return a->var ? ext_->variable(*a->var) : constant(a->coeff);
    }
    ++pos_;  // '('
    SkewPoly f = expr();
    if (!at(')')) fail("expected ')'");
    ++pos_;
    return f;
  }

  SkewPoly normal_term() {
    Elem coeff = ring_.one();
    Monomial m = Monomial::one(nvars());
    bool seen_coeff = false;
    std::optional<std::size_t> last;
    while (true) {
      if (!atom_starts()) break;
      const std::size_t start = pos_;
      auto a = simple_atom();
      if (!a) fail("parentheses are not allowed in normal form");
      if (!a->var) {
        if (seen_coeff || last) {
          pos_ = start;
          fail("normal form allows one leading coefficient per term");
        }
        coeff = a->coeff;
        seen_coeff = true;
      } else {
        if (last && *a->var <= *last) {
          pos_ = start;
          fail("variables must appear once each, in PBW order");
        }
        std::uint32_t e = 1;
        if (at('^')) {
          ++pos_;
          e = exponent();
        }
        m.exps[*a->var] = e;
        last = a->var;
      }
      if (at('*')) {
        ++pos_;
        if (!atom_starts()) fail("expected a factor after '*'");
      }
    }
    SkewPoly f(nvars());
    f.add_term(ring_, m, coeff);
    return f;
  }

  const FiniteRing& ring_;
  const std::vector<std::string>& vars_;
  const Extension* ext_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem parse_coefficient(const FiniteRing& ring, std::string_view text) {
  try {
    return ring.parse(text);
  } catch (const BadCoefficient&) {
    std::string digits;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) digits += c;
    }
    const bool negative = !digits.empty() && digits[0] == '-';
    if (negative) digits.erase(0, 1);
    if (digits.empty() || digits.size() > 18 ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw;
    }
    const auto k = std::stoll(digits);
    return times_one(ring, negative ? -k : k);
  }
}

SkewPoly parse_poly(const Extension& ext, std::string_view text) {
  return Parser(ext.ring(), ext.variable_names(), &ext, text).run();
}

SkewPoly parse_normal_form(const FiniteRing& ring, const std::vector<std::string>& variables,
                           std::string_view text) {
  return Parser(ring, variables, nullptr, text).run();
}

}  // namespace skewpbw::cli
