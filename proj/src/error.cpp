#include "cremona/error.hpp"

namespace cremona {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DegenerateComposition: return "DegenerateComposition";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::IrrationalBasePoint: return "IrrationalBasePoint";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::CollinearBasePoints: return "CollinearBasePoints";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::NotIdentity: return "NotIdentity";
    case ErrorCode::NotDeJonquieres: return "NotDeJonquieres";
    case ErrorCode::SingularComponent: return "SingularComponent";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cremona
