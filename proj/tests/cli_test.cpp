#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "skewpbw/cli/app.hpp"
#include "skewpbw/cli/report_json.hpp"
#include "skewpbw/cli/spec_file.hpp"
#include "support.hpp"

using namespace skewpbw;
using namespace skewpbw::testing;

namespace {

const std::string kSpecs = std::string(SKEWPBW_SOURCE_DIR) + "/specs/";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("skewpbw_cli_test_" + name)).string();
}

cli::json read_json(const std::string& path) {
  std::ifstream in(path);
  return cli::json::parse(in);
}

}  // namespace

TEST(SpecFile, MinimalConstantExtension) {
  const auto ls = cli::load_spec_text(R"({"format": 1, "ring": {"modular": 4}, "n": 2})");
  EXPECT_EQ(ls.ext->nvars(), 2u);
  EXPECT_EQ(ls.ext->ring().size(), 4u);
  EXPECT_EQ(ls.digest.size(), 16u);
}

TEST(SpecFile, DigestIgnoresKeyOrderAndWhitespace) {
  const auto a = cli::load_spec_text(R"({"format": 1, "ring": {"modular": 4}, "n": 2})");
  const auto b = cli::load_spec_text("{\"n\":2,\n \"ring\":{\"modular\":4},\"format\":1}");
  EXPECT_EQ(a.digest, b.digest);
  const auto c = cli::load_spec_text(R"({"format": 1, "ring": {"modular": 4}, "n": 3})");
  EXPECT_NE(a.digest, c.digest);
}

TEST(SpecFile, NonUnitConstantPointsAtRelation) {
  try {
    cli::load_spec_file(kSpecs + "bad_constant.json");
    FAIL() << "expected SpecError";
  } catch (const cli::SpecError& e) {
    EXPECT_STREQ(e.kind(), "NonUnitConstant");
    EXPECT_EQ(e.pointer(), "/relations/0/c");
  }
}

TEST(SpecFile, WrongTableLengthIsParseError) {
  try {
    cli::load_spec_file(kSpecs + "bad_table.json");
    FAIL() << "expected SpecError";
  } catch (const cli::SpecError& e) {
    EXPECT_STREQ(e.kind(), "ParseError");
    EXPECT_EQ(e.pointer(), "/sigma/0/table");
  }
}

TEST(SpecFile, MalformedJson) {
  try {
    cli::load_spec_text("{\n  \"format\": 1,\n  \"ring\": \n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(SpecFile, UnknownKeyRejected) {
  EXPECT_THROW(cli::load_spec_text(R"({"format": 1, "ring": {"modular": 4}, "n": 2, "colour": 1})"),
               cli::SpecError);
  EXPECT_THROW(cli::load_spec_text(R"({"format": 2, "ring": {"modular": 4}, "n": 2})"), cli::SpecError);
}

TEST(SpecFile, PresetAndExplicitAreExclusive) {
  EXPECT_THROW(cli::load_spec_text(R"({"format": 1, "preset": {"name": "swap_ore"}, "n": 2})"), cli::SpecError);
}

TEST(SpecFile, ExplicitRelationsMatchPreset) {
  const auto a = cli::load_spec_file(kSpecs + "qweyl3_explicit.json");
  const auto b = cli::load_preset("quantum_weyl", {{"p", 3}, {"a", 1}, {"b", 1}});
  for (const auto* text : {"d1*x1", "d2*x2", "d2*d1", "x2*x1", "d1*x2"}) {
    EXPECT_EQ(a.ext->format(cli::parse_poly(*a.ext, text)), b.ext->format(cli::parse_poly(*b.ext, text))) << text;
  }
}

TEST(SpecFile, EveryShippedGoodSpecLoads) {
  for (const auto& entry : std::filesystem::directory_iterator(kSpecs)) {
    const auto name = entry.path().filename().string();
    if (name.rfind("bad_", 0) == 0) continue;
    EXPECT_NO_THROW(cli::load_spec_file(entry.path().string())) << name;
  }
}

TEST(ParsePoly, Examples) {
  const auto z4 = constant_ext(z(4), 2);
  const auto f = cli::parse_poly(*z4, "2 + 2*x1");
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coeff(Monomial::one(2), 0), el(z4->ring(), "2"));
  EXPECT_EQ(f.coeff(Monomial::var(2, 0), 0), el(z4->ring(), "2"));

  const auto qw = qweyl(5, 0, 0);
  EXPECT_EQ(qw->format(cli::parse_poly(*qw, "d1*x1")), "1 + x1*d1");
  EXPECT_EQ(qw->format(cli::parse_poly(*qw, "d1 x1 - x1 d1")), "1");

  EXPECT_THROW(cli::parse_poly(*z4, "x9"), UnknownVariable);
  EXPECT_THROW(cli::parse_poly(*z4, "2 + "), ParseError);
  EXPECT_THROW(cli::parse_poly(*z4, "(x1"), ParseError);
}

TEST(ParsePoly, NormalFormIsStrict) {
  const auto z4 = constant_ext(z(4), 2);
  EXPECT_THROW(cli::parse_normal_form(z4->ring(), z4->variable_names(), "x2*x1"), ParseError);
  EXPECT_THROW(cli::parse_normal_form(z4->ring(), z4->variable_names(), "x1*2"), ParseError);
  EXPECT_NO_THROW(cli::parse_normal_form(z4->ring(), z4->variable_names(), "3*x1^2*x2"));
}

TEST(ParsePoly, MatrixCoefficients) {
  const auto ext = constant_ext(m2f2(), 1);
  const auto f = cli::parse_poly(*ext, "[[1,0],[0,0]] + [[0,1],[0,0]]*x1");
  EXPECT_EQ(ext->format(f), "[[1,0],[0,0]] + [[0,1],[0,0]]*x1");
  EXPECT_TRUE(cli::parse_poly(*ext, "[[2,0],[0,0]]").is_zero());
  EXPECT_THROW(cli::parse_poly(*ext, "[[1,0]]"), BadCoefficient);
}

TEST(Cli, Mul) {
  const auto r = run({"mul", "--spec", kSpecs + "qweyl5.json", "d1*x1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "1 + x1*d1\n");
}

TEST(Cli, NormalFormAndLeading) {
  EXPECT_EQ(run({"nf", "--spec", kSpecs + "z4.json", "x2*x1 + 2*x1*x2"}).out, "3*x1*x2\n");
  const auto r = run({"leading", "--spec", kSpecs + "qweyl5.json", "1 + x1*d1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("lm = x1*d1"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"mul", "--spec", kSpecs + "z4.json", "x9"}).code, cli::kUsage);
  EXPECT_EQ(run({"validate", "--spec", kSpecs + "missing.json"}).code, cli::kUsage);
  const auto bad = run({"validate", "--spec", kSpecs + "bad_constant.json"});
  EXPECT_EQ(bad.code, cli::kUsage);
  EXPECT_NE(bad.err.find("NonUnitConstant"), std::string::npos);
  EXPECT_NE(bad.err.find("/relations/0/c"), std::string::npos);
}

TEST(Cli, ArmendarizCounterexampleReportReverifies) {
  const auto path = temp_path("m2f2.json");
  const auto r = run({"armendariz", "--variant", "skew-pi", "--spec", kSpecs + "m2f2.json", "--support", "deg1",
                      "--json", path});
  EXPECT_EQ(r.code, cli::kFails);
  const auto doc = read_json(path);
  const auto& w = doc.at("body").at("results").at(0).at("witness");
  EXPECT_EQ(w.at("f"), "[[1,0],[0,0]] + [[0,1],[0,0]]*x");
  EXPECT_EQ(w.at("g"), "[[0,0],[1,0]] + [[1,0],[0,0]]*x");
  EXPECT_EQ(w.at("fg"), "0");
  const auto ls = cli::load_spec_file(kSpecs + "m2f2.json");
  EXPECT_EQ(doc.at("body").at("spec_digest"), ls.digest);
  const auto check = cli::check_report(Analysis::run(ls.ext), doc);
  EXPECT_EQ(check.checked, 1u);
  EXPECT_TRUE(check.ok());
}

TEST(Cli, TamperedWitnessIsRejected) {
  const auto path = temp_path("m2f2_tampered.json");
  run({"armendariz", "--variant", "skew-pi", "--spec", kSpecs + "m2f2.json", "--json", path});
  auto doc = read_json(path);
  auto& w = doc["body"]["results"][0]["witness"];
  w["g"] = "[[0,0],[1,0]] + [[0,1],[0,0]]*x";
  w.erase("fg");
  const auto ls = cli::load_spec_file(kSpecs + "m2f2.json");
  EXPECT_FALSE(cli::check_report(Analysis::run(ls.ext), doc).ok());
}

TEST(Cli, SuiteExitCodes) {
  const auto z4 = run({"suite", "--spec", kSpecs + "z4.json"});
  EXPECT_EQ(z4.code, cli::kOk);
  EXPECT_NE(z4.out.find("reversible_compatible_implies_skew_pi: confirmed"), std::string::npos);
  EXPECT_EQ(run({"suite", "--spec", kSpecs + "m2f2.json"}).code, cli::kOk);
}

TEST(Cli, CompatAndLemmas) {
  const auto sw = run({"compat", "--spec", kSpecs + "swap_ore.json"});
  EXPECT_EQ(sw.code, cli::kFails);
  EXPECT_NE(sw.out.find("(1,0), (1,0)"), std::string::npos);
  const auto df = run({"lemmas", "--spec", kSpecs + "differential.json"});
  EXPECT_EQ(df.code, cli::kFails);
  EXPECT_NE(df.out.find("not applicable"), std::string::npos);
  EXPECT_EQ(run({"lemmas", "--spec", kSpecs + "z4.json"}).code, cli::kOk);
}

TEST(Cli, PresetFlag) {
  const auto r = run({"mul", "--preset", "quantum_weyl", "--param", "p=3", "--param", "a=1", "--param", "b=1",
                      "d2*x2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "1 + 2*x1*d2 + x2*d2\n");
  EXPECT_EQ(run({"presets"}).code, cli::kOk);
}

TEST(Cli, JsonBodiesAreDeterministic) {
  const auto a = temp_path("det_a.json"), b = temp_path("det_b.json");
  for (const auto& path : {a, b}) {
    run({"suite", "--spec", kSpecs + "f2xf2.json", "--json", path});
  }
  EXPECT_EQ(read_json(a).at("body").dump(), read_json(b).at("body").dump());
  const auto s = temp_path("det_serial.json");
  run({"suite", "--spec", kSpecs + "f2xf2.json", "--serial", "--json", s});
  EXPECT_EQ(read_json(a).at("body").dump(), read_json(s).at("body").dump());
}

TEST(Cli, FrozenExampleReport) {
  const auto frozen = read_json(std::string(SKEWPBW_SOURCE_DIR) + "/docs/example-report.json");
  const auto path = temp_path("frozen.json");
  run({"armendariz", "--variant", "skew-pi", "--spec", kSpecs + "m2f2.json", "--support", "deg1", "--json", path});
  EXPECT_EQ(read_json(path).at("body").dump(2), frozen.at("body").dump(2));
}
