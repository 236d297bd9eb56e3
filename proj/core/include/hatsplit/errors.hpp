#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hatsplit {

enum class ErrorCode {
  EmptyWord,
  UnknownLetter,
  NotClosedPath,
  InvalidTarget,
  NonRoseTarget,
  UnknownVertex,
  InvalidGraph,
  CycleComponent,
  NotForest,
  Degree2VertexPresent,
  IsolatedVertex,
  DegreeTooSmall,
  PreconditionViolation,
  NotUnexposed,
  Case1HypothesisFails,
  Case2HypothesisFails,
  InvalidComplex,
  NonSimplicialAfterRetries,
  UnknownPreset,
  UnknownSimplex,
  BudgetExceeded,
  DanglingReference,
  MissingMarks,
  InvalidQuery,
  SizeTooSmall,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Input or precondition failure. The code lets callers (and the CLI) branch
// without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a mathematical guarantee fails on valid input. Reaching one of
// these means the implementation (or the theorem behind it) is wrong.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hatsplit
