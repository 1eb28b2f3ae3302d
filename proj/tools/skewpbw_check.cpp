// Re-verifies every witness in a JSON report against the spec it was
// produced from.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "skewpbw/cli/report_json.hpp"
#include "skewpbw/cli/spec_file.hpp"

using namespace skewpbw;

int main(int argc, char** argv) {
  CLI::App app{"Re-verify the witnesses in a skewpbw JSON report", "skewpbw-check"};
  std::string spec, report;
  app.add_option("--spec", spec, "Spec file the report was produced from")->required();
  app.add_option("--report", report, "JSON report")->required();
  CLI11_PARSE(app, argc, argv);

  try {
    const auto ls = cli::load_spec_file(spec);
    std::ifstream in(report);
    if (!in) {
      std::cerr << "cannot read " << report << "\n";
      return 2;
    }
    const auto doc = cli::json::parse(in);
    if (doc.at("body").at("spec_digest") != ls.digest) {
      std::cerr << "report was produced from a different spec (digest mismatch)\n";
      return 1;
    }
    const auto res = cli::check_report(Analysis::run(ls.ext), doc);
    for (const auto& f : res.failures) std::cout << "FAIL " << f << "\n";
    std::cout << res.checked << " witness(es) checked, " << res.failures.size() << " failed\n";
    return res.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
