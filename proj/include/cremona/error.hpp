#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

enum class ErrorCode {
  DivisionByZero,
  MixedFields,
  DegreeMismatch,
  ZeroPolynomial,
  NotDivisible,
  SingularMatrix,
  DegenerateComposition,
  UnsupportedDegree,
  IrrationalBasePoint,
  DuplicatePoints,
  CollinearBasePoints,
  PatternMismatch,
  HypothesisFailed,
  GenericityFailure,
  NotIdentity,
  NotDeJonquieres,
  SingularComponent,
  SingularInput,
  ParseError,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code; every failure raised by the
/// library goes through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cremona
