#pragma once

#include <stdexcept>
#include <string>

namespace parteq {

enum class ErrorCode {
  InvalidPartSet,
  InvalidArgument,
  DuplicateAbscissa,
  InconsistentPoints,
  ZeroPolynomial,
  DegreeUnsupported,
  NonIntegerCoefficients,
  NotPolynomial,
  SquareD,
  NotHyperbolic,
  NoSolutionFound,
  UnknownFamily,
  HypothesisViolated,
  WrongArity,
  BudgetExceeded,
  VerificationFailed,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace parteq
