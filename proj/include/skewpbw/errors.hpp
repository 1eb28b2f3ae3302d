#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewpbw {

/// Base of every error raised by the library. `kind()` is the stable tag
/// used in diagnostics and JSON reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define SKEWPBW_SIMPLE_ERROR(Name)                              \
  class Name : public Error {                                   \
   public:                                                      \
    using Error::Error;                                         \
    const char* kind() const noexcept override { return #Name; } \
  };

SKEWPBW_SIMPLE_ERROR(SizeCapExceeded)
SKEWPBW_SIMPLE_ERROR(ClosureCapExceeded)
SKEWPBW_SIMPLE_ERROR(CentralityViolation)
SKEWPBW_SIMPLE_ERROR(NonUnitConstant)
SKEWPBW_SIMPLE_ERROR(InjectivityViolation)
SKEWPBW_SIMPLE_ERROR(TailOrderViolation)
SKEWPBW_SIMPLE_ERROR(RewriteBudgetExceeded)
SKEWPBW_SIMPLE_ERROR(HypothesisNotVerified)
SKEWPBW_SIMPLE_ERROR(UnknownPreset)
SKEWPBW_SIMPLE_ERROR(InvalidParameter)
SKEWPBW_SIMPLE_ERROR(UnknownVariable)
SKEWPBW_SIMPLE_ERROR(BadCoefficient)

#undef SKEWPBW_SIMPLE_ERROR

/// A ring or map law failed; `witness` holds the display form of the
/// offending elements in the order they appear in the law.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string law, std::vector<std::string> witness)
      : Error(describe(law, witness)), law_(std::move(law)), witness_(std::move(witness)) {}

  const char* kind() const noexcept override { return "AxiomViolation"; }
  const std::string& law() const noexcept { return law_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  static std::string describe(const std::string& law, const std::vector<std::string>& w) {
    std::string s = "axiom '" + law + "' fails at (";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ", ";
      s += w[i];
    }
    return s + ")";
  }

  std::string law_;
  std::vector<std::string> witness_;
};

/// The two evaluation orders of an overlap disagree.
class InconsistentPresentation : public Error {
 public:
  InconsistentPresentation(std::string overlap, std::string left_nf, std::string right_nf)
      : Error("inconsistent presentation at " + overlap + ": " + left_nf + " != " + right_nf),
        overlap_(std::move(overlap)),
        left_(std::move(left_nf)),
        right_(std::move(right_nf)) {}

  const char* kind() const noexcept override { return "InconsistentPresentation"; }
  const std::string& overlap() const noexcept { return overlap_; }
  const std::string& left() const noexcept { return left_; }
  const std::string& right() const noexcept { return right_; }

 private:
  std::string overlap_, left_, right_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  const char* kind() const noexcept override { return "ParseError"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

}  // namespace skewpbw
