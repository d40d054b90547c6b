#include "ffzeta/error.hpp"

namespace ffzeta {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::TooFewCounts: return "TooFewCounts";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InconsistentCounts: return "InconsistentCounts";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::NonPositiveH: return "NonPositiveH";
    case ErrorCode::DegenerateTarget: return "DegenerateTarget";
    case ErrorCode::QuadratureUnstable: return "QuadratureUnstable";
    case ErrorCode::InsufficientGrid: return "InsufficientGrid";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::BadNormalization: return "BadNormalization";
    case ErrorCode::OrbitMismatch: return "OrbitMismatch";
    case ErrorCode::ResidualZeros: return "ResidualZeros";
    case ErrorCode::ExtrapolationUnstable: return "ExtrapolationUnstable";
    case ErrorCode::GeometryError: return "GeometryError";
    case ErrorCode::PoleCollision: return "PoleCollision";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ffzeta
