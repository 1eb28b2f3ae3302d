#include "skewpbw/cli/spec_file.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "skewpbw/cli/poly_parse.hpp"
#include "skewpbw/presets.hpp"

namespace skewpbw::cli {

namespace {

[[noreturn]] void bad(const std::string& pointer, const std::string& message) {
  throw SpecError("ParseError", pointer, message);
}

std::string escape_token(const std::string& key) {
  std::string s;
  for (char c : key) {
    if (c == '~') {
      s += "~0";
    } else if (c == '/') {
      s += "~1";
    } else {
      s += c;
    }
  }
  return s;
}

std::string at(const std::string& pointer, const std::string& key) { return pointer + "/" + escape_token(key); }
std::string at(const std::string& pointer, std::size_t i) { return pointer + "/" + std::to_string(i); }

void only_keys(const json& j, const std::string& pointer, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(pointer, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) bad(at(pointer, k), "unknown key '" + k + "'");
  }
}

std::int64_t get_int(const json& j, const std::string& pointer, std::int64_t lo, std::int64_t hi) {
  if (!j.is_number_integer()) bad(pointer, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < lo || v > hi) bad(pointer, "value " + std::to_string(v) + " out of range");
  return v;
}

const std::string& get_string(const json& j, const std::string& pointer) {
  if (!j.is_string()) bad(pointer, "expected a string");
  return j.get_ref<const std::string&>();
}

// Runs `f`, re-labelling library errors with the spec location.
template <class F>
auto located(const std::string& pointer, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(e.kind(), pointer, e.what());
  }
}

std::size_t variable_of(const json& j, const std::vector<std::string>& names, const std::string& pointer) {
  const auto& name = get_string(j, pointer);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw SpecError("UnknownVariable", pointer, "unknown variable '" + name + "'");
}

RingMap map_from_json(const FiniteRing& ring, const json& j, const std::string& pointer, MapKind kind,
                      const RingMap* sigma) {
  only_keys(j, pointer, {"table", "builder", "c"});
  if (j.contains("table") == j.contains("builder")) bad(pointer, "give exactly one of 'table' or 'builder'");
  RingMap m;
  if (j.contains("table")) {
    if (j.contains("c")) bad(at(pointer, "c"), "'c' only applies to the inner builder");
    const auto& t = j.at("table");
    const auto tp = at(pointer, "table");
    if (!t.is_array()) bad(tp, "expected an array");
    if (t.size() != ring.size()) {
      bad(tp, "table has " + std::to_string(t.size()) + " entries, ring has " + std::to_string(ring.size()));
    }
    for (std::size_t i = 0; i < t.size(); ++i) m.table.push_back(element_from_json(ring, t[i], at(tp, i)));
    m.kind = kind;
    return m;
  }
  const auto& b = get_string(j.at("builder"), at(pointer, "builder"));
  if (b != "inner" && j.contains("c")) bad(at(pointer, "c"), "'c' only applies to the inner builder");
  located(at(pointer, "builder"), [&] {
    if (b == "identity") {
      m = builders::identity(ring);
    } else if (b == "zero") {
      m = builders::zero(ring);
    } else if (b == "swap") {
      m = builders::coordinate_swap(ring);
    } else if (b == "frobenius") {
      m = builders::frobenius(ring);
    } else if (b == "derivative") {
      m = builders::formal_derivative(ring);
    } else if (b == "inner") {
      if (kind != MapKind::sigma_derivation) bad(at(pointer, "builder"), "inner builds a sigma-derivation");
      if (!j.contains("c")) bad(pointer, "inner derivation needs 'c'");
      m = builders::inner_derivation(ring, *sigma, element_from_json(ring, j.at("c"), at(pointer, "c")));
    } else {
      bad(at(pointer, "builder"), "unknown builder '" + b + "'");
    }
    return 0;
  });
  m.kind = kind;
  return m;
}

presets::Params params_from_json(const json& j, const std::string& pointer) {
  presets::Params p;
  if (j.is_null()) return p;
  if (!j.is_object()) bad(pointer, "expected an object");
  for (const auto& [k, v] : j.items()) {
    if (k == "ring") {
      p.ring = ring_from_json(v, at(pointer, k));
    } else {
      p.ints[k] = get_int(v, at(pointer, k), -(1ll << 40), 1ll << 40);
    }
  }
  return p;
}

LoadedSpec finish(const json& doc, ExtensionSpec spec, const std::string& pointer) {
  LoadedSpec out;
  out.ext = located(pointer, [&] { return Extension::create(std::move(spec)); });
  out.canonical = doc;
  out.digest = fnv1a64_hex(doc.dump());
  return out;
}

LoadedSpec from_document(const json& doc) {
  only_keys(doc, "", {"format", "description", "ring", "n", "variables", "order", "sigma", "delta", "relations",
                      "preset"});
  if (!doc.contains("format")) bad("/format", "missing 'format' (expected 1)");
  if (doc.at("format") != 1) bad("/format", "unsupported format (expected 1)");
  if (doc.contains("description")) get_string(doc.at("description"), "/description");

  if (doc.contains("preset")) {
    for (const char* k : {"ring", "n", "variables", "order", "sigma", "delta", "relations"}) {
      if (doc.contains(k)) bad(at("", k), "'preset' cannot be combined with explicit fields");
    }
    const auto& p = doc.at("preset");
    only_keys(p, "/preset", {"name", "params"});
    if (!p.contains("name")) bad("/preset", "missing 'name'");
    const auto& name = get_string(p.at("name"), "/preset/name");
    const auto params = params_from_json(p.value("params", json()), "/preset/params");
    auto spec = located("/preset", [&] { return presets::build(name, params); });
    return finish(doc, std::move(spec), "/preset");
  }

  if (!doc.contains("ring")) bad("/ring", "missing 'ring'");
  const auto desc = ring_from_json(doc.at("ring"), "/ring");
  const auto ring = located("/ring", [&] { return FiniteRing::build(desc); });
  const auto& R = *ring;

  std::vector<std::string> names;
  if (doc.contains("variables")) {
    const auto& v = doc.at("variables");
    if (!v.is_array()) bad("/variables", "expected an array of names");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& name = get_string(v[i], at("/variables", i));
      if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
        bad(at("/variables", i), "variable names must be identifiers");
      }
      for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
          bad(at("/variables", i), "variable names must be identifiers");
        }
      }
      if (!seen.insert(name).second) bad(at("/variables", i), "duplicate variable '" + name + "'");
      names.push_back(name);
    }
  }
  std::size_t n = names.size();
  if (doc.contains("n")) {
    n = static_cast<std::size_t>(get_int(doc.at("n"), "/n", 0, 16));
    if (!names.empty() && names.size() != n) bad("/n", "'n' disagrees with 'variables'");
  } else if (!doc.contains("variables")) {
    bad("/n", "give 'n' or 'variables'");
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }

  ExtensionSpec spec;
  spec.ring = ring;
  spec.family = MapFamily::trivial(ring, n);
  spec.variable_names = names;
  spec.order = MonomialOrder::deglex(n);

  if (doc.contains("order")) {
    const auto& o = doc.at("order");
    only_keys(o, "/order", {"kind", "precedence"});
    OrderKind kind = OrderKind::deglex;
    if (o.contains("kind")) {
      const auto& k = get_string(o.at("kind"), "/order/kind");
      if (k == "deglex") {
        kind = OrderKind::deglex;
      } else if (k == "lex") {
        kind = OrderKind::lex;
      } else if (k == "degrevlex") {
        kind = OrderKind::degrevlex;
      } else {
        bad("/order/kind", "unknown order '" + k + "'");
      }
    }
    std::vector<std::size_t> prec = spec.order.precedence();
    if (o.contains("precedence")) {
      const auto& p = o.at("precedence");
      if (!p.is_array() || p.size() != n) bad("/order/precedence", "expected all " + std::to_string(n) + " variables");
      prec.clear();
      for (std::size_t i = 0; i < n; ++i) prec.push_back(variable_of(p[i], names, at("/order/precedence", i)));
    }
    spec.order = located("/order/precedence", [&] { return MonomialOrder(kind, prec); });
  }

  for (const char* key : {"sigma", "delta"}) {
    if (!doc.contains(key)) continue;
    const std::string ptr = at("", key);
    const auto& arr = doc.at(key);
    if (!arr.is_array() || arr.size() != n) bad(ptr, "expected " + std::to_string(n) + " map entries");
    const bool is_sigma = std::string(key) == "sigma";
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = at(ptr, i);
      if (is_sigma) {
        spec.family.sigmas[i] = map_from_json(R, arr[i], p, MapKind::endomorphism, nullptr);
      } else {
        spec.family.deltas[i] = map_from_json(R, arr[i], p, MapKind::sigma_derivation, &spec.family.sigmas[i]);
      }
    }
  }
  // Per-map checks so a failure points at the entry that caused it.
  for (std::size_t i = 0; i < n; ++i) {
    const auto sp = at("/sigma", i), dp = at("/delta", i);
    located(sp, [&] {
      std::vector<bool> hit(R.size(), false);
      for (Elem v : spec.family.sigmas[i].table) {
        if (hit[v]) throw InjectivityViolation("sigma of " + names[i] + " is not injective");
        hit[v] = true;
      }
      validate_map(R, spec.family.sigmas[i]);
      return 0;
    });
    located(dp, [&] {
      validate_map(R, spec.family.deltas[i], &spec.family.sigmas[i]);
      return 0;
    });
  }

  if (doc.contains("relations")) {
    const auto& rels = doc.at("relations");
    if (!rels.is_array()) bad("/relations", "expected an array");
    for (std::size_t k = 0; k < rels.size(); ++k) {
      const auto p = at("/relations", k);
      const auto& r = rels[k];
      only_keys(r, p, {"i", "j", "c", "tail"});
      if (!r.contains("i") || !r.contains("j")) bad(p, "relation needs 'i' and 'j'");
      const auto i = variable_of(r.at("i"), names, at(p, "i"));
      const auto j = variable_of(r.at("j"), names, at(p, "j"));
      if (i >= j) bad(p, "'i' must come before 'j' in the variable list");
      if (spec.relations.count({i, j})) bad(p, "duplicate relation");
      Relation rel{R.one(), SkewPoly(n)};
      if (r.contains("c")) {
        rel.c = element_from_json(R, r.at("c"), at(p, "c"));
        located(at(p, "c"), [&] {
          if (!R.is_central(rel.c)) throw CentralityViolation("constant " + R.format(rel.c) + " is not central");
          if (!R.inverse(rel.c)) throw NonUnitConstant("constant " + R.format(rel.c) + " is not a unit");
          return 0;
        });
      }
      if (r.contains("tail")) {
        const auto& text = get_string(r.at("tail"), at(p, "tail"));
        rel.tail = located(at(p, "tail"), [&] { return parse_normal_form(R, names, text); });
        Monomial lead = Monomial::var(n, i);
        ++lead.exps[j];
        for (const auto& [m, c] : rel.tail.terms()) {
          if (!spec.order.less(m, lead)) {
            throw SpecError("TailOrderViolation", at(p, "tail"), "tail term is not below " + names[i] + "*" + names[j]);
          }
        }
      }
      spec.relations[{i, j}] = std::move(rel);
    }
  }
  return finish(doc, std::move(spec), "/relations");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t p = 0; p < upto; ++p) {
      if (text[p] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
}

}  // namespace

RingDescriptor ring_from_json(const json& j, const std::string& pointer) {
  if (!j.is_object() || j.size() != 1) bad(pointer, "ring descriptor needs exactly one of modular, product, matrix, tables, dual");
  const auto it = j.begin();
  const std::string key = it.key();
  const json& v = it.value();
  const auto p = at(pointer, key);
  if (key == "modular") return RingDescriptor::modular(static_cast<std::uint32_t>(get_int(v, p, 1, 1 << 20)));
  if (key == "dual") return RingDescriptor::dual_numbers(static_cast<std::uint32_t>(get_int(v, p, 2, 1024)));
  if (key == "product") {
    if (!v.is_array() || v.empty()) bad(p, "expected a nonempty array of ring descriptors");
    std::vector<RingDescriptor> fs;
    for (std::size_t i = 0; i < v.size(); ++i) fs.push_back(ring_from_json(v[i], at(p, i)));
    return RingDescriptor::product(std::move(fs));
  }
  if (key == "matrix") {
    only_keys(v, p, {"k", "modulus"});
    if (!v.contains("k") || !v.contains("modulus")) bad(p, "matrix needs 'k' and 'modulus'");
    return RingDescriptor::matrix(static_cast<std::uint32_t>(get_int(v.at("k"), at(p, "k"), 1, 16)),
                                  static_cast<std::uint32_t>(get_int(v.at("modulus"), at(p, "modulus"), 1, 1 << 20)));
  }
  if (key == "tables") {
    only_keys(v, p, {"size", "add", "mul", "zero", "one", "names"});
    for (const char* k : {"size", "add", "mul", "zero", "one"}) {
      if (!v.contains(k)) bad(p, std::string("tables need '") + k + "'");
    }
    TablesDesc t;
    t.size = static_cast<std::uint32_t>(get_int(v.at("size"), at(p, "size"), 1, 1024));
    for (const char* k : {"add", "mul"}) {
      const auto& tab = v.at(k);
      const auto tp = at(p, k);
      if (!tab.is_array() || tab.size() != t.size) bad(tp, "expected " + std::to_string(t.size) + " rows");
      auto& dst = std::string(k) == "add" ? t.add : t.mul;
      for (std::size_t r = 0; r < t.size; ++r) {
        if (!tab[r].is_array() || tab[r].size() != t.size) bad(at(tp, r), "expected " + std::to_string(t.size) + " entries");
        std::vector<Elem> row;
        for (std::size_t c = 0; c < t.size; ++c) {
          row.push_back(static_cast<Elem>(get_int(tab[r][c], at(at(tp, r), c), 0, t.size - 1)));
        }
        dst.push_back(std::move(row));
      }
    }
    t.zero = static_cast<Elem>(get_int(v.at("zero"), at(p, "zero"), 0, t.size - 1));
    t.one = static_cast<Elem>(get_int(v.at("one"), at(p, "one"), 0, t.size - 1));
    if (v.contains("names")) {
      const auto& ns = v.at("names");
      if (!ns.is_array() || ns.size() != t.size) bad(at(p, "names"), "expected one name per element");
      for (std::size_t i = 0; i < t.size; ++i) t.names.push_back(get_string(ns[i], at(at(p, "names"), i)));
    }
    return RingDescriptor::tables(std::move(t));
  }
  bad(p, "unknown ring kind '" + key + "'");
}

Elem element_from_json(const FiniteRing& ring, const json& j, const std::string& pointer) {
  if (j.is_number_integer()) {
    return static_cast<Elem>(get_int(j, pointer, 0, static_cast<std::int64_t>(ring.size()) - 1));
  }
  if (j.is_string()) {
    return located(pointer, [&] { return parse_coefficient(ring, j.get_ref<const std::string&>()); });
  }
  if (j.is_array()) {
    if (ring.backend() == Backend::product) {
      if (j.size() != ring.factors().size()) bad(pointer, "wrong number of components");
      std::vector<Elem> parts;
      for (std::size_t i = 0; i < j.size(); ++i) {
        parts.push_back(element_from_json(*ring.factors()[i], j[i], at(pointer, i)));
      }
      return ring.from_components(parts);
    }
    if (ring.backend() == Backend::matrix) {
      const auto k = ring.matrix_dim();
      if (j.size() != k) bad(pointer, "expected " + std::to_string(k) + " rows");
      std::vector<Elem> parts;
      for (std::size_t r = 0; r < k; ++r) {
        if (!j[r].is_array() || j[r].size() != k) bad(at(pointer, r), "expected " + std::to_string(k) + " entries");
        for (std::size_t c = 0; c < k; ++c) {
          const auto v = get_int(j[r][c], at(at(pointer, r), c), -(1ll << 40), 1ll << 40);
          const auto m = static_cast<std::int64_t>(ring.base_modulus());
          parts.push_back(static_cast<Elem>(((v % m) + m) % m));
        }
      }
      return ring.from_components(parts);
    }
  }
  bad(pointer, "expected a ring element");
}

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

LoadedSpec load_spec_text(std::string_view text) { return from_document(parse_json(text)); }

LoadedSpec load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("IOError", "", "cannot read spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_spec_text(ss.str());
}

LoadedSpec load_preset(const std::string& name, const json& params) {
  json doc = {{"format", 1}, {"preset", {{"name", name}}}};
  if (!params.is_null() && !params.empty()) doc["preset"]["params"] = params;
  return from_document(doc);
}

}  // namespace skewpbw::cli
