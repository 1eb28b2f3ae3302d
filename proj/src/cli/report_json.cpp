#include "skewpbw/cli/report_json.hpp"

#include "skewpbw/cli/poly_parse.hpp"

namespace skewpbw::cli {

namespace {

json monomial_json(const Extension& ext, const Monomial& m) { return ext.format_monomial(m); }

json elems_json(const FiniteRing& ring, const std::vector<Elem>& es) {
  json a = json::array();
  for (Elem e : es) a.push_back(ring.format(e));
  return a;
}

}  // namespace

json witness_to_json(const Extension& ext, const Witness& w) {
  const auto& R = ext.ring();
  return std::visit(
      [&](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ElementWitness>) {
          return {{"type", "elements"}, {"law", v.law}, {"elements", elems_json(R, v.elems)}};
        } else if constexpr (std::is_same_v<T, MapWitness>) {
          json j = {{"type", "maps"}, {"law", v.law}, {"elements", elems_json(R, v.elems)}};
          if (v.sigma_alpha) j["sigma_alpha"] = v.sigma_alpha->exps;
          if (v.delta_word) {
            json word = json::array();
            for (auto i : *v.delta_word) word.push_back(ext.variable_names().at(i));
            j["delta_word"] = word;
          }
          return j;
        } else {
          json j = {{"type", "polynomials"},
                    {"f", ext.format(v.f)},
                    {"g", ext.format(v.g)},
                    {"fg", ext.format(ext.mul(v.f, v.g))},
                    {"left", monomial_json(ext, v.left)},
                    {"right", monomial_json(ext, v.right)},
                    {"product", R.format(v.product)}};
          if (v.offending) j["offending"] = ext.format(*v.offending);
          return j;
        }
      },
      w);
}

json bound_to_json(const Extension& ext, const SearchBound& b) {
  json sup = json::array();
  for (const auto& m : b.support) sup.push_back(monomial_json(ext, m));
  json scope = {{"kind", b.scope.kind == ScopeKind::all ? "all" : "sampled"}};
  if (b.scope.kind == ScopeKind::sampled) {
    scope["samples"] = b.scope.samples;
    scope["seed"] = b.scope.seed;
  }
  return {{"support", sup}, {"scope", scope}};
}

json report_to_json(const Extension& ext, const PropertyReport& r) {
  json j = {{"property", r.property}, {"verdict", verdict_name(r.verdict)}, {"work_count", r.work_count}};
  if (r.witness) j["witness"] = witness_to_json(ext, *r.witness);
  if (r.bound) j["bound"] = bound_to_json(ext, *r.bound);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

json implication_to_json(const Extension& ext, const ImplicationReport& r) {
  json ante = json::array(), cons = json::array();
  for (const auto& a : r.antecedents) ante.push_back(report_to_json(ext, a));
  for (const auto& c : r.consequents) cons.push_back(report_to_json(ext, c));
  return {{"implication", r.name},
          {"status", implication_status_name(r.status)},
          {"antecedents", ante},
          {"consequents", cons}};
}

json make_document(const std::string& command, const std::string& spec_digest, std::uint64_t seed, json results,
                   double elapsed_ms) {
  return {{"body",
           {{"tool", kToolName},
            {"version", kToolVersion},
            {"command", command},
            {"spec_digest", spec_digest},
            {"seed", seed},
            {"results", std::move(results)}}},
          {"timing", {{"elapsed_ms", elapsed_ms}, {"threads", kernels::max_threads()}}}};
}

namespace {

Monomial monomial_from(const Extension& ext, const std::string& text) {
  const auto p = parse_normal_form(ext.ring(), ext.variable_names(), text);
  if (p.size() != 1 || p.terms().begin()->second != ext.ring().one()) {
    throw BadCoefficient("'" + text + "' is not a monomial");
  }
  return p.terms().begin()->first;
}

std::vector<Elem> elems_from(const FiniteRing& R, const json& j) {
  std::vector<Elem> out;
  for (const auto& e : j) out.push_back(parse_coefficient(R, e.get<std::string>()));
  return out;
}

Witness witness_from(const Extension& ext, const json& j) {
  const auto& R = ext.ring();
  const auto type = j.at("type").get<std::string>();
  if (type == "elements") return ElementWitness{j.at("law").get<std::string>(), elems_from(R, j.at("elements"))};
  if (type == "maps") {
    MapWitness w;
    w.law = j.at("law").get<std::string>();
    w.elems = elems_from(R, j.at("elements"));
    if (j.contains("sigma_alpha")) w.sigma_alpha = Monomial{j.at("sigma_alpha").get<std::vector<std::uint32_t>>()};
    if (j.contains("delta_word")) {
      std::vector<std::size_t> word;
      for (const auto& name : j.at("delta_word")) {
        const auto& names = ext.variable_names();
        const auto it = std::find(names.begin(), names.end(), name.get<std::string>());
        if (it == names.end()) throw UnknownVariable("unknown variable in delta word");
        word.push_back(static_cast<std::size_t>(it - names.begin()));
      }
      w.delta_word = word;
    }
    return w;
  }
  PolyWitness w;
  w.f = parse_poly(ext, j.at("f").get<std::string>());
  w.g = parse_poly(ext, j.at("g").get<std::string>());
  w.left = monomial_from(ext, j.at("left").get<std::string>());
  w.right = monomial_from(ext, j.at("right").get<std::string>());
  w.product = parse_coefficient(R, j.at("product").get<std::string>());
  if (j.contains("offending")) w.offending = parse_poly(ext, j.at("offending").get<std::string>());
  if (j.contains("fg") && parse_poly(ext, j.at("fg").get<std::string>()) != ext.mul(w.f, w.g)) {
    throw std::runtime_error("recorded fg does not match f*g");
  }
  return w;
}

bool reverify(const Analysis& an, const PropertyReport& r) {
  const auto& R = an.ring();
  if (auto c = parse_ring_class(r.property)) {
    const auto* w = std::get_if<ElementWitness>(&*r.witness);
    if (!w) return false;
    RingClassVerdict v;
    v.ring_class = *c;
    v.holds = false;
    v.witness = w->elems;
    v.law = w->law;
    return witness_reproduces(R, v);
  }
  if (r.property == "sigma_compatible" || r.property == "delta_compatible" || r.property == "sigma_rigid") {
    return map_witness_reproduces(R, an.ext->family(), r);
  }
  for (auto v : {ArmendarizVariant::skew_pi, ArmendarizVariant::sigma_delta_skew, ArmendarizVariant::sigma_skew,
                 ArmendarizVariant::skew}) {
    if (r.property == variant_property(v)) return armendariz_witness_reproduces(an, v, r);
  }
  if (r.property.rfind("lemma_", 0) == 0) return lemma_witness_reproduces(an, r);
  if (r.property == "nil_criterion_agreement") {
    const auto* w = std::get_if<PolyWitness>(&*r.witness);
    return w && is_nilpotent_poly_criterion(an, w->f).nilpotent != is_nilpotent_poly_oracle(an, w->f).nilpotent;
  }
  return false;
}

void walk(const Analysis& an, const json& j, const std::string& path, CheckResult& out) {
  if (j.is_object()) {
    if (j.contains("property") && j.contains("verdict") && j.at("verdict") == "fails") {
      ++out.checked;
      try {
        PropertyReport r;
        r.property = j.at("property").get<std::string>();
        r.verdict = Verdict::fails;
        if (!j.contains("witness")) throw std::runtime_error("no witness");
        r.witness = witness_from(*an.ext, j.at("witness"));
        if (!reverify(an, r)) out.failures.push_back(path + ": witness for " + r.property + " does not reproduce");
      } catch (const std::exception& e) {
        out.failures.push_back(path + ": " + e.what());
      }
    }
    for (const auto& [k, v] : j.items()) walk(an, v, path + "/" + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) walk(an, j[i], path + "/" + std::to_string(i), out);
  }
}

}  // namespace

CheckResult check_report(const Analysis& an, const json& document) {
  CheckResult out;
  const json& body = document.contains("body") ? document.at("body") : document;
  walk(an, body, "/body", out);
  return out;
}

}  // namespace skewpbw::cli
