#include "kanact/error.hpp"

namespace kanact {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MissingFaceEntry: return "MissingFaceEntry";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::NotAnAction: return "NotAnAction";
    case ErrorCode::NotCrossed: return "NotCrossed";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NoDescent: return "NoDescent";
    case ErrorCode::RelatorViolation: return "RelatorViolation";
    case ErrorCode::GlueFailure: return "GlueFailure";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace kanact
