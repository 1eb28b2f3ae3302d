#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "skewpbw/extension.hpp"

namespace skewpbw::cli {

using json = nlohmann::json;

/// A library error tied to the spec-file location (JSON pointer) that
/// caused it. kind() is the underlying error's kind.
class SpecError : public Error {
 public:
  SpecError(std::string kind, std::string pointer, const std::string& message)
      : Error(message),
        kind_(std::move(kind)),
        pointer_(std::move(pointer)) {}

  const char* kind() const noexcept override { return kind_.c_str(); }
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string kind_;
  std::string pointer_;
};

struct LoadedSpec {
  Extension::Ptr ext;
  /// The spec document as read, re-serialized with sorted keys.
  json canonical;
  /// FNV-1a 64 of canonical.dump(), 16 hex digits.
  std::string digest;
};

/// Throws ParseError for malformed JSON and SpecError for everything else.
LoadedSpec load_spec_text(std::string_view text);
LoadedSpec load_spec_file(const std::string& path);
/// Same as a spec file holding only {"format": 1, "preset": ...}.
LoadedSpec load_preset(const std::string& name, const json& params);

RingDescriptor ring_from_json(const json& j, const std::string& pointer = "/ring");
/// Integer: element index. String: display syntax. Array: components of a
/// product or matrix element.
Elem element_from_json(const FiniteRing& ring, const json& j, const std::string& pointer);

std::string fnv1a64_hex(std::string_view data);

}  // namespace skewpbw::cli
