#ifndef BAXTER_ERROR_HPP
#define BAXTER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace baxter {

enum class ErrorCode {
  RingMismatch,
  DivisionByNonUnit,
  NegativeN,
  ZeroSubstitutionIntoNegativePower,
  NotPrime,
  ParseError,
  ShapeMismatch,
  CtxMismatch,
  ZeroElement,
  EnumerationTooLarge,
  Mismatch,
  ZeroDivisorWeight,
  ZeroWeight,
  PropertyViolation,
  NotHomogeneous,
  NonFieldRing,
  NonQAlgebra,
  BoundsTooSmall,
  UnsupportedContext,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace baxter

#endif
