#include "cyclofac/error.hpp"

namespace cyclofac {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::ConstantTermZero: return "ConstantTermZero";
    case ErrorCode::ConstantInput: return "ConstantInput";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::A0TooLarge: return "A0TooLarge";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NotAFactor: return "NotAFactor";
    case ErrorCode::DegenerateTrinomial: return "DegenerateTrinomial";
    case ErrorCode::ExponentCollision: return "ExponentCollision";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace cyclofac
