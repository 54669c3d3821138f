#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subadd {

enum class ErrorKind {
  SingularMatrix,
  NonSymmetric,
  InvalidCenter,
  NotNegativeDefinite,
  NonIntegral,
  NotAntiNef,
  NegativeMarked,
  StageOutOfRange,
  InvalidParameters,
  NoLambda,
  ClassificationViolation,
  NotGorenstein,
  NoQualifyingCycle,
  RingMismatch,
  ParseError,
  UnknownExample,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-status mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace subadd
