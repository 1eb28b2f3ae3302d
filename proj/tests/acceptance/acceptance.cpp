// One PASS/FAIL line per acceptance criterion. Every criterion also yields a
// JSON body so the determinism criterion can compare two full runs.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "skewpbw/cli/app.hpp"
#include "skewpbw/cli/poly_parse.hpp"
#include "skewpbw/cli/report_json.hpp"
#include "skewpbw/cli/spec_file.hpp"
#include "skewpbw/presets.hpp"

using namespace skewpbw;
using cli::json;

namespace {

const std::string kSpecs = std::string(SKEWPBW_SOURCE_DIR) + "/specs/";

struct Outcome {
  bool pass = true;
  std::string detail;
  json body = json::object();
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (ok || !o.pass) return;
  o.pass = false;
  o.detail = what;
}

Extension::Ptr catalog_ext(const presets::CatalogEntry& e) {
  return Extension::create(presets::build(e.name, e.params));
}

std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  Monomial m = Monomial::one(n);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m.exps[i] = e;
      rec(i + 1, left - e);
    }
    m.exps[i] = 0;
  };
  rec(0, d);
  return out;
}

Outcome counterexample() {
  Outcome o;
  const auto path = (std::filesystem::temp_directory_path() / "skewpbw_acceptance_m2f2.json").string();
  std::ostringstream out, err;
  const int code = cli::run({"armendariz", "--variant", "skew-pi", "--spec", kSpecs + "m2f2.json", "--support",
                             "deg1", "--json", path},
                            out, err);
  require(o, code == cli::kFails, "exit code " + std::to_string(code) + ", expected 1");
  std::ifstream in(path);
  const json doc = json::parse(in);
  o.body = doc.at("body");

  const auto ls = cli::load_spec_file(kSpecs + "m2f2.json");
  const auto an = Analysis::run(ls.ext);
  const auto check = cli::check_report(an, doc);
  require(o, check.checked == 1 && check.ok(), "report checker rejected the witness");

  const auto& ext = *ls.ext;
  const auto& R = ext.ring();
  const auto& w = o.body.at("results").at(0).at("witness");
  const auto f = cli::parse_poly(ext, w.at("f").get<std::string>());
  const auto g = cli::parse_poly(ext, w.at("g").get<std::string>());
  require(o, f == cli::parse_poly(ext, "[[1,0],[0,0]] + [[0,1],[0,0]]*x"), "f is not e11 + e12 x");
  require(o, g == cli::parse_poly(ext, "[[0,0],[1,0]] + [[1,0],[0,0]]*x"), "g is not e21 + e11 x");
  require(o, ext.mul(f, g).is_zero(), "fg != 0");
  const Elem a0 = f.coeff(Monomial::one(1), R.zero());
  const Elem b1 = g.coeff(Monomial::var(1, 0), R.zero());
  require(o, R.mul(a0, b1) == R.parse("[[1,0],[0,0]]") && !is_nilpotent(R, R.mul(a0, b1)),
          "a0 b1 is not the non-nilpotent e11");
  if (o.pass) o.detail = "witness f = " + w.at("f").get<std::string>() + ", g = " + w.at("g").get<std::string>();
  return o;
}

Outcome nil_theorem() {
  Outcome o;
  const auto ext = Extension::create(presets::constant(FiniteRing::build(RingDescriptor::modular(4)), 2));
  const auto an = Analysis::run(ext);
  require(o, an.theorem_hypotheses(), "hypotheses not established on Z/4");
  const auto support = degree_bound(*ext, 1).support;
  const auto& R = ext->ring();
  int agree = 0, nilpotent = 0, expected_nil = 0, total = 0;
  json verdicts = json::array();
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      for (Elem c = 0; c < 4; ++c) {
        SkewPoly f = ext->zero();
        f.add_term(R, support[0], a);
        f.add_term(R, support[1], b);
        f.add_term(R, support[2], c);
        const auto oracle = is_nilpotent_poly_oracle(an, f);
        const auto crit = is_nilpotent_poly_criterion(an, f);
        agree += oracle.nilpotent == crit.nilpotent;
        nilpotent += oracle.nilpotent;
        auto in_nil = [&](Elem e) { return R.format(e) == "0" || R.format(e) == "2"; };
        const bool even = in_nil(a) && in_nil(b) && in_nil(c);
        expected_nil += even;
        require(o, oracle.nilpotent == even, "wrong verdict for " + ext->format(f));
        verdicts.push_back({ext->format(f), oracle.nilpotent, oracle.exponent_used});
        ++total;
      }
    }
  }
  require(o, total == 64, "expected 64 polynomials");
  require(o, agree == 64, "oracle and criterion disagree");
  require(o, nilpotent == 8 && expected_nil == 8, "expected exactly 8 nilpotent polynomials");
  o.body = {{"verdicts", verdicts}};
  if (o.pass) o.detail = std::to_string(agree) + "/64 agree, " + std::to_string(nilpotent) + " nilpotent";
  return o;
}

Outcome theorem_suite(const std::string& spec) {
  Outcome o;
  const auto ls = cli::load_spec_file(kSpecs + spec);
  const auto an = Analysis::run(ls.ext);
  const auto reps = verify_implication_suite(an, degree_bound(*ls.ext, 1));
  json results = json::array();
  bool found = false;
  for (const auto& r : reps) {
    results.push_back(cli::implication_to_json(*ls.ext, r));
    require(o, r.status != ImplicationStatus::violation, r.name + " violated");
    if (r.name != "reversible_compatible_implies_skew_pi") continue;
    found = true;
    require(o, r.status == ImplicationStatus::confirmed, "theorem implication not confirmed");
    for (const auto& a : r.antecedents) require(o, a.verdict == Verdict::holds, a.property + " not exact holds");
    const auto& c = r.consequents.at(0);
    require(o, c.verdict == Verdict::holds_at_bound, "skew_pi is " + std::string(verdict_name(c.verdict)));
    require(o, c.bound && c.bound->scope.kind == ScopeKind::all, "coefficient scope was sampled");
    if (o.pass) o.detail = spec + ": confirmed, " + std::to_string(c.work_count) + " pairs";
  }
  require(o, found, "theorem implication missing");
  o.body = {{"results", results}};
  return o;
}

Outcome closed_form() {
  Outcome o;
  std::size_t comparisons = 0;
  json counts = json::object();
  for (const auto& [label, name, params] :
       std::vector<std::tuple<std::string, std::string, presets::Params>>{
           {"swap_ore", "swap_ore", {}},
           {"differential_ore", "differential_ore", {}},
           {"quantum_weyl/F5/a0b0", "quantum_weyl", {{{"p", 5}, {"a", 0}, {"b", 0}}, std::nullopt}}}) {
    const auto ext = Extension::create(presets::build(name, params));
    const auto& R = ext->ring();
    std::size_t here = 0;
    for (const auto& alpha : monomials_up_to(ext->nvars(), 3)) {
      for (Elem r = 0; r < R.size(); ++r) {
        const auto lhs = ext->x_alpha_times_r(alpha, r);
        const auto rhs = ext->mul(ext->monomial(alpha, R.one()), ext->constant(r));
        require(o, lhs == rhs, label + ": " + ext->format_monomial(alpha) + " * " + R.format(r));
        ++here;
      }
    }
    counts[label] = here;
    comparisons += here;
  }
  require(o, comparisons >= 200, "only " + std::to_string(comparisons) + " comparisons");
  o.body = {{"comparisons", counts}};
  if (o.pass) o.detail = std::to_string(comparisons) + " exact comparisons";
  return o;
}

Outcome consistency() {
  Outcome o;
  json labels = json::array();
  for (const auto& e : presets::catalog()) {
    try {
      const auto rep = catalog_ext(e)->validate();
      labels.push_back({e.label, rep.triples_checked, rep.scalar_checks});
    } catch (const Error& err) {
      require(o, false, e.label + ": " + err.what());
    }
  }
  auto spec = presets::quantum_weyl(5, 0, 0);
  spec.relations.at({0, 1}).tail.add_term(*spec.ring, Monomial{{2, 0, 0, 0}}, spec.ring->one());
  json corrupted;
  try {
    Extension::create(spec);
    require(o, false, "corrupted quantum_weyl validated");
  } catch (const InconsistentPresentation& e) {
    corrupted = {{"overlap", e.overlap()}, {"left", e.left()}, {"right", e.right()}};
    if (o.pass) o.detail = std::to_string(labels.size()) + " presets valid; corrupted tail fails at " + e.overlap();
  }
  o.body = {{"presets", labels}, {"corrupted", corrupted}};
  return o;
}

Outcome compatibility() {
  Outcome o;
  json body = json::object();
  std::size_t max_closure = 0;

  const auto sw = cli::load_spec_file(kSpecs + "swap_ore.json").ext;
  const auto sres = check_compatibility(sw->family());
  require(o, sres.sigma.verdict == Verdict::fails, "swap sigma-compatibility did not fail");
  if (sres.sigma.witness) {
    const auto& R = sw->ring();
    const auto& w = std::get<MapWitness>(*sres.sigma.witness);
    require(o, w.elems == std::vector<Elem>{R.parse("(1,0)"), R.parse("(1,0)")}, "swap witness is not (1,0),(1,0)");
    body["swap"] = cli::report_to_json(*sw, sres.sigma);
  }
  max_closure = std::max({max_closure, sres.closures->sigma.size(), sres.closures->delta.size()});

  const auto df = cli::load_spec_file(kSpecs + "differential.json").ext;
  const auto dres = check_compatibility(df->family());
  require(o, dres.delta.verdict == Verdict::fails, "derivative delta-compatibility did not fail");
  if (dres.delta.witness) {
    const auto& R = df->ring();
    const auto& w = std::get<MapWitness>(*dres.delta.witness);
    require(o, w.elems == std::vector<Elem>{R.parse("t"), R.parse("t")}, "derivative witness is not t,t");
    body["derivative"] = cli::report_to_json(*df, dres.delta);
  }
  max_closure = std::max({max_closure, dres.closures->sigma.size(), dres.closures->delta.size()});

  json identity = json::array();
  for (const auto& e : presets::catalog()) {
    const auto ext = catalog_ext(e);
    const auto res = check_compatibility(MapFamily::trivial(ext->spec().ring, ext->nvars()));
    require(o, res.compatible(), e.label + ": identity family not compatible");
    max_closure = std::max({max_closure, res.closures->sigma.size(), res.closures->delta.size()});
    identity.push_back({e.label, verdict_name(res.sigma.verdict), verdict_name(res.delta.verdict)});
  }
  require(o, max_closure <= 2, "closure of size " + std::to_string(max_closure));
  body["identity_families"] = identity;
  o.body = body;
  if (o.pass) o.detail = "witnesses (1,0),(1,0) and t,t; largest closure " + std::to_string(max_closure);
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  json body = json::array();
  int compatible = 0;
  for (const auto& e : presets::catalog()) {
    const auto an = Analysis::run(catalog_ext(e));
    if (!an.compat.compatible()) continue;
    ++compatible;
    for (const auto& r : verify_lemma_nil_stability(an)) {
      require(o, r.verdict != Verdict::fails, e.label + ": " + r.property + " fails");
      if (r.property == "lemma_sigma_nil_reflect") require(o, r.verdict == Verdict::holds, e.label + ": reflect");
      body.push_back({e.label, r.property, verdict_name(r.verdict), r.work_count});
    }
  }
  o.body = {{"reports", body}};
  if (o.pass) o.detail = std::to_string(compatible) + " compatible presets, zero violations";
  return o;
}

std::vector<Criterion> criteria() {
  return {
      {1, "counterexample reproduction on M2(F2)", 10.0, counterexample},
      {2, "nilpotency oracle vs coefficient criterion on Z/4", 5.0, nil_theorem},
      {3, "reversible + compatible implies skew-pi on Z/4 and F2xF2", 60.0,
       [] {
         auto timed = [](const std::string& spec) {
           const auto t0 = std::chrono::steady_clock::now();
           Outcome r = theorem_suite(spec);
           const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
           require(r, s < 60.0, spec + " took more than 60 s");
           char buf[32];
           std::snprintf(buf, sizeof buf, " in %.3f s", s);
           if (r.pass) r.detail += buf;
           return r;
         };
         Outcome a = timed("z4.json");
         Outcome b = timed("f2xf2.json");
         Outcome o;
         o.pass = a.pass && b.pass;
         o.detail = a.pass ? (b.pass ? a.detail + "; " + b.detail : b.detail) : a.detail;
         o.body = {{"z4", a.body}, {"f2xf2", b.body}};
         return o;
       }},
      {4, "closed form x^alpha r equals rewriting", 10.0, closed_form},
      {5, "presentation consistency of presets", 10.0, consistency},
      {6, "compatibility decisions", 1.0, compatibility},
      {7, "nil-stability lemma suite", 5.0, lemma_suite},
  };
}

}  // namespace

int main() {
  bool all = true;
  std::vector<std::string> first_bodies;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t k = 0;
    for (const auto& c : criteria()) {
      const auto t0 = std::chrono::steady_clock::now();
      Outcome o;
      try {
        o = c.run();
      } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
      }
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const std::string body = o.body.dump();
      if (pass == 0) {
        first_bodies.push_back(body);
        const bool ok = o.pass && s < c.limit_s;
        if (o.pass && !ok) o.detail += "; too slow";
        all = all && ok;
        std::printf("%s criterion %d: %s (%.3f s, limit %.0f s) %s\n", ok ? "PASS" : "FAIL", c.id, c.name, s,
                    c.limit_s, o.detail.c_str());
      } else if (first_bodies[k] != body) {
        first_bodies[k] = "";
      }
      ++k;
    }
  }
  std::size_t differing = 0;
  for (const auto& b : first_bodies) differing += b.empty();
  const bool det = differing == 0;
  all = all && det;
  std::printf("%s criterion 8: byte-identical report bodies across two runs of criteria 1-7 (%zu differing)\n",
              det ? "PASS" : "FAIL", differing);
  std::fflush(stdout);
  return all ? 0 : 1;
}
