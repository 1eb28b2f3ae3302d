#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "skewpbw/nilarmendariz.hpp"

namespace skewpbw::cli {

using json = nlohmann::json;

inline constexpr const char* kToolName = "skewpbw";
inline constexpr const char* kToolVersion = "0.1.0";

json witness_to_json(const Extension& ext, const Witness& w);
json bound_to_json(const Extension& ext, const SearchBound& b);
json report_to_json(const Extension& ext, const PropertyReport& r);
json implication_to_json(const Extension& ext, const ImplicationReport& r);

/// {"body": {...deterministic...}, "timing": {...}}
json make_document(const std::string& command, const std::string& spec_digest, std::uint64_t seed, json results,
                   double elapsed_ms);

struct CheckResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Finds every failing property report inside the document body, parses
/// its witness back through the spec and re-verifies it against the
/// property's defining condition.
CheckResult check_report(const Analysis& an, const json& document);

}  // namespace skewpbw::cli
