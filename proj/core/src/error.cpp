#include "baxter/error.hpp"

namespace baxter {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorCode::NegativeN: return "NegativeN";
    case ErrorCode::ZeroSubstitutionIntoNegativePower: return "ZeroSubstitutionIntoNegativePower";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::CtxMismatch: return "CtxMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::ZeroDivisorWeight: return "ZeroDivisorWeight";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::PropertyViolation: return "PropertyViolation";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NonFieldRing: return "NonFieldRing";
    case ErrorCode::NonQAlgebra: return "NonQAlgebra";
    case ErrorCode::BoundsTooSmall: return "BoundsTooSmall";
    case ErrorCode::UnsupportedContext: return "UnsupportedContext";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace baxter
