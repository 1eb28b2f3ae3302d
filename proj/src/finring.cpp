#include "skewpbw/finring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

namespace skewpbw {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

void skip_space(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

void expect(std::string_view s, std::size_t& pos, char c) {
  skip_space(s, pos);
  if (pos >= s.size() || s[pos] != c) {
    throw BadCoefficient("expected '" + std::string(1, c) + "' in coefficient '" + std::string(s) + "'");
  }
  ++pos;
}

std::int64_t parse_int(std::string_view s, std::size_t& pos) {
  skip_space(s, pos);
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::int64_t v = 0;
  const auto* first = s.data() + pos;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr == first) {
    throw BadCoefficient("expected an integer in coefficient '" + std::string(s) + "'");
  }
  pos += static_cast<std::size_t>(ptr - first);
  return negative ? -v : v;
}

Elem reduce_mod(std::int64_t v, std::uint32_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<Elem>(((v % m) + m) % m);
}

}  // namespace

RingDescriptor RingDescriptor::dual_numbers(std::uint32_t p) {
  TablesDesc t;
  t.size = p * p;
  t.add.assign(t.size, std::vector<Elem>(t.size));
  t.mul.assign(t.size, std::vector<Elem>(t.size));
  for (Elem x = 0; x < t.size; ++x) {
    for (Elem y = 0; y < t.size; ++y) {
      const Elem a = x % p, b = x / p, c = y % p, d = y / p;
      t.add[x][y] = (a + c) % p + ((b + d) % p) * p;
      t.mul[x][y] = (a * c) % p + ((a * d + b * c) % p) * p;
    }
  }
  t.zero = 0;
  t.one = 1 % t.size;
  for (Elem x = 0; x < t.size; ++x) {
    const Elem a = x % p, b = x / p;
    std::string name;
    if (b == 0) {
      name = std::to_string(a);
    } else {
      const std::string tpart = (b == 1 ? "" : std::to_string(b)) + "t";
      name = a == 0 ? tpart : std::to_string(a) + "+" + tpart;
    }
    t.names.push_back(name);
  }
  return tables(std::move(t));
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::modular: return "modular";
    case Backend::product: return "product";
    case Backend::matrix: return "matrix";
    case Backend::tables: return "tables";
  }
  return "?";
}

std::shared_ptr<const FiniteRing> FiniteRing::build(const RingDescriptor& desc, const RingLimits& limits) {
  std::shared_ptr<FiniteRing> r(new FiniteRing());
  r->desc_ = desc;
  if (const auto* m = std::get_if<ModularDesc>(&desc.body)) {
    if (m->modulus < 1) throw InvalidParameter("modulus must be >= 1");
    if (m->modulus > limits.max_size) throw SizeCapExceeded("modular ring larger than size cap");
    r->backend_ = Backend::modular;
    r->size_ = m->modulus;
    r->modulus_ = m->modulus;
    r->zero_ = 0;
    r->one_ = 1 % m->modulus;
  } else if (const auto* p = std::get_if<ProductDesc>(&desc.body)) {
    if (p->factors.empty()) throw InvalidParameter("product ring needs at least one factor");
    r->backend_ = Backend::product;
    std::uint64_t size = 1;
    for (const auto& f : p->factors) {
      auto fr = build(f, limits);
      r->radix_.push_back(static_cast<std::uint32_t>(size));
      size *= fr->size();
      if (size > limits.max_size) throw SizeCapExceeded("product ring larger than size cap");
      r->factors_.push_back(std::move(fr));
    }
    r->size_ = static_cast<std::uint32_t>(size);
    std::vector<Elem> zeros, ones;
    for (const auto& f : r->factors_) {
      zeros.push_back(f->zero());
      ones.push_back(f->one());
    }
    r->zero_ = r->from_components(zeros);
    r->one_ = r->from_components(ones);
  } else if (const auto* mx = std::get_if<MatrixDesc>(&desc.body)) {
    if (mx->dim < 1 || mx->modulus < 1) throw InvalidParameter("matrix ring needs dim >= 1 and modulus >= 1");
    const auto size = checked_pow(mx->modulus, std::uint64_t{mx->dim} * mx->dim, limits.max_size);
    if (size > limits.max_size) throw SizeCapExceeded("matrix ring larger than size cap");
    r->backend_ = Backend::matrix;
    r->size_ = static_cast<std::uint32_t>(size);
    r->modulus_ = mx->modulus;
    r->dim_ = mx->dim;
    std::vector<Elem> entries(std::size_t{mx->dim} * mx->dim, 0);
    r->zero_ = 0;
    for (std::uint32_t i = 0; i < mx->dim; ++i) entries[i * mx->dim + i] = 1 % mx->modulus;
    r->one_ = r->from_components(entries);
  } else {
    const auto& t = std::get<TablesDesc>(desc.body);
    const auto n = t.size;
    if (n < 1) throw InvalidParameter("table ring needs size >= 1");
    if (n > limits.max_size) throw SizeCapExceeded("table ring larger than size cap");
    if (t.add.size() != n || t.mul.size() != n) throw InvalidParameter("operation tables must have size rows");
    r->backend_ = Backend::tables;
    r->size_ = n;
    r->add_.reserve(std::size_t{n} * n);
    r->mul_.reserve(std::size_t{n} * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      if (t.add[a].size() != n || t.mul[a].size() != n) throw InvalidParameter("operation tables must be square");
      for (std::uint32_t b = 0; b < n; ++b) {
        if (t.add[a][b] >= n || t.mul[a][b] >= n) throw InvalidParameter("table entry out of range");
        r->add_.push_back(t.add[a][b]);
        r->mul_.push_back(t.mul[a][b]);
      }
    }
    if (t.zero >= n || t.one >= n) throw InvalidParameter("zero/one index out of range");
    r->zero_ = t.zero;
    r->one_ = t.one;
    if (!t.names.empty()) {
      if (t.names.size() != n) throw InvalidParameter("names must list every element");
      std::unordered_set<std::string> seen(t.names.begin(), t.names.end());
      if (seen.size() != n) throw InvalidParameter("element names must be distinct");
      r->names_ = t.names;
    }
  }
  if (r->size_ > 1 && r->zero_ == r->one_) throw AxiomViolation("zero_ne_one", {r->format(r->zero_)});

  r->neg_.resize(r->size_);
  if (r->backend_ == Backend::tables) {
    for (Elem a = 0; a < r->size_; ++a) {
      Elem inv = r->size_;
      for (Elem b = 0; b < r->size_; ++b) {
        if (r->add(a, b) == r->zero_) {
          inv = b;
          break;
        }
      }
      if (inv == r->size_) throw AxiomViolation("additive_inverse", {r->format(a)});
      r->neg_[a] = inv;
    }
  } else {
    for (Elem a = 0; a < r->size_; ++a) r->neg_[a] = r->neg_structural(a);
    if (r->size_ <= limits.table_cap) {
      const std::size_t n = r->size_;
      std::vector<Elem> add(n * n), mul(n * n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          add[a * n + b] = r->add_structural(a, b);
          mul[a * n + b] = r->mul_structural(a, b);
        }
      }
      r->add_ = std::move(add);
      r->mul_ = std::move(mul);
    }
  }
  r->check_axioms(limits);
  return r;
}

std::vector<Elem> FiniteRing::components(Elem a) const {
  std::vector<Elem> out;
  switch (backend_) {
    case Backend::product:
      for (std::size_t i = 0; i < factors_.size(); ++i) out.push_back((a / radix_[i]) % factors_[i]->size());
      break;
    case Backend::matrix:
      for (std::uint32_t i = 0; i < dim_ * dim_; ++i) {
        out.push_back(a % modulus_);
        a /= modulus_;
      }
      break;
    default:
      out.push_back(a);
  }
  return out;
}

Elem FiniteRing::from_components(const std::vector<Elem>& parts) const {
  switch (backend_) {
    case Backend::product: {
      Elem a = 0;
      for (std::size_t i = 0; i < factors_.size(); ++i) a += parts.at(i) * radix_[i];
      return a;
    }
    case Backend::matrix: {
      Elem a = 0;
      for (std::size_t i = parts.size(); i-- > 0;) a = a * modulus_ + parts[i];
      return a;
    }
    default:
      return parts.at(0);
  }
}

Elem FiniteRing::add_structural(Elem a, Elem b) const {
  switch (backend_) {
    case Backend::modular:
      return static_cast<Elem>((std::uint64_t{a} + b) % modulus_);
    case Backend::product: {
      auto x = components(a), y = components(b);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = factors_[i]->add(x[i], y[i]);
      return from_components(x);
    }
    case Backend::matrix: {
      auto x = components(a), y = components(b);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % modulus_;
      return from_components(x);
    }
    case Backend::tables:
      break;
  }
  return add_[static_cast<std::size_t>(a) * size_ + b];
}

Elem FiniteRing::mul_structural(Elem a, Elem b) const {
  switch (backend_) {
    case Backend::modular:
      return static_cast<Elem>((std::uint64_t{a} * b) % modulus_);
    case Backend::product: {
      auto x = components(a), y = components(b);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = factors_[i]->mul(x[i], y[i]);
      return from_components(x);
    }
    case Backend::matrix: {
      const auto x = components(a), y = components(b);
      std::vector<Elem> z(x.size(), 0);
      for (std::uint32_t i = 0; i < dim_; ++i) {
        for (std::uint32_t j = 0; j < dim_; ++j) {
          std::uint64_t s = 0;
          for (std::uint32_t k = 0; k < dim_; ++k) s += std::uint64_t{x[i * dim_ + k]} * y[k * dim_ + j];
          z[i * dim_ + j] = static_cast<Elem>(s % modulus_);
        }
      }
      return from_components(z);
    }
    case Backend::tables:
      break;
  }
  return mul_[static_cast<std::size_t>(a) * size_ + b];
}

Elem FiniteRing::neg_structural(Elem a) const {
  switch (backend_) {
    case Backend::modular:
      return (modulus_ - a) % modulus_;
    case Backend::product: {
      auto x = components(a);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = factors_[i]->neg(x[i]);
      return from_components(x);
    }
    case Backend::matrix: {
      auto x = components(a);
      for (auto& e : x) e = (modulus_ - e) % modulus_;
      return from_components(x);
    }
    case Backend::tables:
      break;
  }
  return neg_[a];
}

bool FiniteRing::is_central(Elem c) const {
  for (Elem r = 0; r < size_; ++r) {
    if (mul(c, r) != mul(r, c)) return false;
  }
  return true;
}

std::optional<Elem> FiniteRing::inverse(Elem c) const {
  for (Elem u = 0; u < size_; ++u) {
    if (mul(c, u) == one_ && mul(u, c) == one_) return u;
  }
  return std::nullopt;
}

bool FiniteRing::is_commutative() const {
  const auto hit = kernels::find_first(true, std::uint64_t{size_} * size_, [&](std::uint64_t k) {
    const Elem a = static_cast<Elem>(k / size_), b = static_cast<Elem>(k % size_);
    return mul(a, b) != mul(b, a);
  });
  return !hit;
}

std::string FiniteRing::format(Elem a) const {
  switch (backend_) {
    case Backend::modular:
      return std::to_string(a);
    case Backend::product: {
      const auto parts = components(a);
      std::string s = "(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += factors_[i]->format(parts[i]);
      }
      return s + ")";
    }
    case Backend::matrix: {
      const auto parts = components(a);
      std::string s = "[";
      for (std::uint32_t i = 0; i < dim_; ++i) {
        if (i) s += ",";
        s += "[";
        for (std::uint32_t j = 0; j < dim_; ++j) {
          if (j) s += ",";
          s += std::to_string(parts[i * dim_ + j]);
        }
        s += "]";
      }
      return s + "]";
    }
    case Backend::tables:
      return names_.empty() ? std::to_string(a) : names_[a];
  }
  return std::to_string(a);
}

Elem FiniteRing::parse_at(std::string_view s, std::size_t& pos) const {
  skip_space(s, pos);
  switch (backend_) {
    case Backend::modular:
      return reduce_mod(parse_int(s, pos), modulus_);
    case Backend::product: {
      expect(s, pos, '(');
      std::vector<Elem> parts;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) expect(s, pos, ',');
        parts.push_back(factors_[i]->parse_at(s, pos));
      }
      expect(s, pos, ')');
      return from_components(parts);
    }
    case Backend::matrix: {
      expect(s, pos, '[');
      std::vector<Elem> parts(std::size_t{dim_} * dim_);
      for (std::uint32_t i = 0; i < dim_; ++i) {
        if (i) expect(s, pos, ',');
        expect(s, pos, '[');
        for (std::uint32_t j = 0; j < dim_; ++j) {
          if (j) expect(s, pos, ',');
          parts[i * dim_ + j] = reduce_mod(parse_int(s, pos), modulus_);
        }
        expect(s, pos, ']');
      }
      expect(s, pos, ']');
      return from_components(parts);
    }
    case Backend::tables: {
      if (names_.empty()) {
        const auto v = parse_int(s, pos);
        if (v < 0 || v >= static_cast<std::int64_t>(size_)) {
          throw BadCoefficient("element index out of range in '" + std::string(s) + "'");
        }
        return static_cast<Elem>(v);
      }
      // Longest name match at this position.
      std::size_t best_len = 0;
      Elem best = size_;
      for (Elem a = 0; a < size_; ++a) {
        const auto& name = names_[a];
        if (name.size() > best_len && s.substr(pos, name.size()) == name) {
          best_len = name.size();
          best = a;
        }
      }
      if (best == size_) throw BadCoefficient("unknown element name in '" + std::string(s) + "'");
      pos += best_len;
      return best;
    }
  }
  throw BadCoefficient("unparseable coefficient");
}

Elem FiniteRing::parse(std::string_view text) const {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  text = text.substr(b, e - b);
  if (text.empty()) throw BadCoefficient("empty coefficient");
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  // Compound names are printed in parentheses inside polynomials.
  if (backend_ != Backend::product && compact.size() >= 2 && compact.front() == '(' && compact.back() == ')') {
    return parse(std::string_view(compact).substr(1, compact.size() - 2));
  }
  std::size_t pos = 0;
  const Elem v = parse_at(compact, pos);
  if (pos != compact.size()) throw BadCoefficient("trailing characters in coefficient '" + compact + "'");
  return v;
}

AxiomCheck FiniteRing::check_axioms(const RingLimits& limits) const {
  const std::uint64_t n = size_;
  auto fmt = [this](std::initializer_list<Elem> es) {
    std::vector<std::string> out;
    for (Elem e : es) out.push_back(format(e));
    return out;
  };

  // Unary and binary laws, always exhaustive up to the pair space limit.
  for (Elem a = 0; a < n; ++a) {
    if (add(a, zero_) != a || add(zero_, a) != a) throw AxiomViolation("additive_identity", fmt({a}));
    if (mul(a, one_) != a || mul(one_, a) != a) throw AxiomViolation("multiplicative_identity", fmt({a}));
    if (add(a, neg(a)) != zero_) throw AxiomViolation("additive_inverse", fmt({a}));
  }
  ScanOptions pair_opts;
  pair_opts.seed = limits.seed;
  pair_opts.samples = limits.axiom_samples;
  const auto comm = kernels::scan(n * n, pair_opts, [&](std::uint64_t k) {
    const Elem a = static_cast<Elem>(k / n), b = static_cast<Elem>(k % n);
    return add(a, b) != add(b, a);
  });
  if (comm.index) {
    throw AxiomViolation("additive_commutativity",
                         fmt({static_cast<Elem>(*comm.index / n), static_cast<Elem>(*comm.index % n)}));
  }

  ScanOptions triple_opts = pair_opts;
  triple_opts.exhaustive_limit = std::uint64_t{limits.axiom_cap} * limits.axiom_cap * limits.axiom_cap;
  const char* failed = nullptr;
  auto law_fails = [&](Elem a, Elem b, Elem c) -> const char* {
    if (add(add(a, b), c) != add(a, add(b, c))) return "additive_associativity";
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return "multiplicative_associativity";
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return "left_distributivity";
    if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) return "right_distributivity";
    return nullptr;
  };
  const auto res = kernels::scan(n * n * n, triple_opts, [&](std::uint64_t k) {
    return law_fails(static_cast<Elem>(k / (n * n)), static_cast<Elem>((k / n) % n), static_cast<Elem>(k % n)) !=
           nullptr;
  });
  if (res.index) {
    const auto k = *res.index;
    const Elem a = static_cast<Elem>(k / (n * n)), b = static_cast<Elem>((k / n) % n), c = static_cast<Elem>(k % n);
    failed = law_fails(a, b, c);
    throw AxiomViolation(failed, fmt({a, b, c}));
  }
  return {res.work_count, res.sampled};
}

bool is_nilpotent(const FiniteRing& ring, Elem a) { return nilpotency_index(ring, a).has_value(); }

std::optional<std::uint32_t> nilpotency_index(const FiniteRing& ring, Elem a) {
  std::unordered_set<Elem> seen;
  Elem p = a;
  for (std::uint32_t m = 1; m <= ring.size(); ++m) {
    if (p == ring.zero()) return m;
    if (!seen.insert(p).second) return std::nullopt;
    p = ring.mul(p, a);
  }
  return std::nullopt;
}

std::vector<Elem> nil_set(const FiniteRing& ring) {
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a) {
    if (is_nilpotent(ring, a)) out.push_back(a);
  }
  return out;
}

std::vector<bool> nil_mask(const FiniteRing& ring) {
  std::vector<bool> mask(ring.size(), false);
  for (Elem a : nil_set(ring)) mask[a] = true;
  return mask;
}

const char* ring_class_name(RingClass c) {
  switch (c) {
    case RingClass::reduced: return "reduced";
    case RingClass::reversible: return "reversible";
    case RingClass::semicommutative: return "semicommutative";
    case RingClass::ni: return "NI";
  }
  return "?";
}

std::optional<RingClass> parse_ring_class(std::string_view name) {
  if (name == "reduced") return RingClass::reduced;
  if (name == "reversible") return RingClass::reversible;
  if (name == "semicommutative") return RingClass::semicommutative;
  if (name == "NI" || name == "ni") return RingClass::ni;
  return std::nullopt;
}

RingClassVerdict check_ring_class(const FiniteRing& ring, RingClass c, const ScanOptions& opts) {
  const std::uint64_t n = ring.size();
  const Elem zero = ring.zero();
  RingClassVerdict v;
  v.ring_class = c;

  auto finish = [&](const kernels::ScanResult& res, std::string law, auto&& decode) {
    v.work_count += res.work_count;
    v.sampled = v.sampled || res.sampled;
    if (res.index) {
      v.holds = false;
      v.law = std::move(law);
      v.witness = decode(*res.index);
      return true;
    }
    return false;
  };

  switch (c) {
    case RingClass::reduced: {
      const auto res = kernels::scan(n, opts, [&](std::uint64_t k) {
        return k != zero && is_nilpotent(ring, static_cast<Elem>(k));
      });
      finish(res, "nonzero_nilpotent", [](std::uint64_t k) { return std::vector<Elem>{static_cast<Elem>(k)}; });
      break;
    }
    case RingClass::reversible: {
      const auto res = kernels::scan(n * n, opts, [&](std::uint64_t k) {
        const Elem a = static_cast<Elem>(k / n), b = static_cast<Elem>(k % n);
        return ring.mul(a, b) == zero && ring.mul(b, a) != zero;
      });
      finish(res, "ab=0_but_ba!=0", [n](std::uint64_t k) {
        return std::vector<Elem>{static_cast<Elem>(k / n), static_cast<Elem>(k % n)};
      });
      break;
    }
    case RingClass::semicommutative: {
      const auto res = kernels::scan(n * n * n, opts, [&](std::uint64_t k) {
        const Elem a = static_cast<Elem>(k / (n * n)), b = static_cast<Elem>((k / n) % n), r = static_cast<Elem>(k % n);
        return ring.mul(a, b) == zero && ring.mul(ring.mul(a, r), b) != zero;
      });
      finish(res, "ab=0_but_arb!=0", [n](std::uint64_t k) {
        return std::vector<Elem>{static_cast<Elem>(k / (n * n)), static_cast<Elem>(k % n),
                                 static_cast<Elem>((k / n) % n)};
      });
      break;
    }
    case RingClass::ni: {
      const auto nil = nil_set(ring);
      const auto mask = nil_mask(ring);
      const std::uint64_t s = nil.size();
      const auto sum = kernels::scan(s * s, opts, [&](std::uint64_t k) {
        return !mask[ring.add(nil[k / s], nil[k % s])];
      });
      if (finish(sum, "sum", [&](std::uint64_t k) { return std::vector<Elem>{nil[k / s], nil[k % s]}; })) break;
      const auto left = kernels::scan(n * s, opts, [&](std::uint64_t k) {
        return !mask[ring.mul(static_cast<Elem>(k / s), nil[k % s])];
      });
      if (finish(left, "left_absorb",
                 [&](std::uint64_t k) { return std::vector<Elem>{static_cast<Elem>(k / s), nil[k % s]}; })) {
        break;
      }
      const auto right = kernels::scan(n * s, opts, [&](std::uint64_t k) {
        return !mask[ring.mul(nil[k % s], static_cast<Elem>(k / s))];
      });
      finish(right, "right_absorb",
             [&](std::uint64_t k) { return std::vector<Elem>{nil[k % s], static_cast<Elem>(k / s)}; });
      break;
    }
  }
  return v;
}

bool witness_reproduces(const FiniteRing& ring, const RingClassVerdict& v) {
  if (v.holds) return v.witness.empty();
  const auto& w = v.witness;
  const Elem zero = ring.zero();
  switch (v.ring_class) {
    case RingClass::reduced:
      return w.size() == 1 && w[0] != zero && is_nilpotent(ring, w[0]);
    case RingClass::reversible:
      return w.size() == 2 && ring.mul(w[0], w[1]) == zero && ring.mul(w[1], w[0]) != zero;
    case RingClass::semicommutative:
      return w.size() == 3 && ring.mul(w[0], w[2]) == zero && ring.mul(ring.mul(w[0], w[1]), w[2]) != zero;
    case RingClass::ni:
      if (w.size() != 2) return false;
      if (v.law == "sum") return is_nilpotent(ring, w[0]) && is_nilpotent(ring, w[1]) && !is_nilpotent(ring, ring.add(w[0], w[1]));
      if (v.law == "left_absorb") return is_nilpotent(ring, w[1]) && !is_nilpotent(ring, ring.mul(w[0], w[1]));
      if (v.law == "right_absorb") return is_nilpotent(ring, w[0]) && !is_nilpotent(ring, ring.mul(w[0], w[1]));
      return false;
  }
  return false;
}

}  // namespace skewpbw
