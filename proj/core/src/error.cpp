#include "toricq/error.hpp"

namespace toricq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorCode::NonUnimodularCone: return "NonUnimodularCone";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotAFan: return "NotAFan";
    case ErrorCode::InconsistentRelation: return "InconsistentRelation";
    case ErrorCode::NotAmplePolarization: return "NotAmplePolarization";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::InconsistentNormalization: return "InconsistentNormalization";
    case ErrorCode::IncompatibleTruncation: return "IncompatibleTruncation";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::MirrorMapNotSmall: return "MirrorMapNotSmall";
    case ErrorCode::MirrorMapNotInvertible: return "MirrorMapNotInvertible";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace toricq
