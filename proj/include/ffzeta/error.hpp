#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffzeta {

/// Named failure conditions raised by the library. Each maps to one
/// precondition or verification failure of an operation.
enum class ErrorCode {
  NonPrime,
  DegreeZero,
  CapExceeded,
  DivisionByZero,
  FieldMismatch,
  InvalidModel,
  SingularCurve,
  TooFewCounts,
  NonConvergence,
  PoleAtOrigin,
  ZeroDenominator,
  InconsistentCounts,
  PoleHit,
  NonPositiveH,
  DegenerateTarget,
  QuadratureUnstable,
  InsufficientGrid,
  Unsupported,
  BadNormalization,
  OrbitMismatch,
  ResidualZeros,
  ExtrapolationUnstable,
  GeometryError,
  PoleCollision,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ffzeta
