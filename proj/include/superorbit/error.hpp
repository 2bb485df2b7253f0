#pragma once

#include <stdexcept>
#include <string>

namespace superorbit {

enum class ErrorKind {
  ParseError,
  DimensionMismatch,
  GradingViolation,
  JacobiViolation,
  InconsistentAntisymmetry,
  NotAnIdeal,
  NotGraded,
  NotNilpotent,
  PreconditionFailed,
  TargetNotIdeal,
  LambdaNotNonnegative,
  NotPositiveDefinite,
  NotCliffordType,
  NegativeCentralValue,
  NotAdmissible,
  VerificationFailed,
};

const char* to_string(ErrorKind kind);

/// Every library failure is reported through this exception; `kind()` names
/// the violated contract and `what()` carries the diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Verification failures map to exit code 3, everything else to 2.
  bool is_verification_failure() const noexcept {
    return kind_ == ErrorKind::VerificationFailed;
  }

 private:
  ErrorKind kind_;
};

}  // namespace superorbit
