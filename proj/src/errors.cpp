#include "equicolor/errors.hpp"

namespace equicolor {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotAComponent: return "NotAComponent";
    case ErrorCode::ImproperSeed: return "ImproperSeed";
    case ErrorCode::PaletteTooSmall: return "PaletteTooSmall";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::PaletteMismatch: return "PaletteMismatch";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::NotSeparated: return "NotSeparated";
    case ErrorCode::UnacceptableMove: return "UnacceptableMove";
    case ErrorCode::Stalled: return "Stalled";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotDegreeList: return "NotDegreeList";
    case ErrorCode::GallaiTree: return "GallaiTree";
    case ErrorCode::ComponentMissesAnchor: return "ComponentMissesAnchor";
    case ErrorCode::RegularGallaiComponent: return "RegularGallaiComponent";
    case ErrorCode::ImproperInput: return "ImproperInput";
    case ErrorCode::ImproperAux: return "ImproperAux";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, nlohmann::json detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(std::move(detail)) {}

nlohmann::json Error::to_json() const {
  return {{"error", std::string(to_string(code_))}, {"message", what()}, {"detail", detail_}};
}

void fail(ErrorCode code, const std::string& message, nlohmann::json detail) {
  throw Error(code, message, std::move(detail));
}

}  // namespace equicolor
