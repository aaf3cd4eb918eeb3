#include "parteq/error.hpp"

namespace parteq {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPartSet: return "InvalidPartSet";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorCode::InconsistentPoints: return "InconsistentPoints";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorCode::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::SquareD: return "SquareD";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::NoSolutionFound: return "NoSolutionFound";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace parteq
