#include "charp/error.hpp"

namespace charp {

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OrderViolation:
    case ErrorCode::UnitIdeal:
    case ErrorCode::BadHeight:
    case ErrorCode::PrimeDoesNotContainIdeal:
    case ErrorCode::RankDeficient:
      return false;
    default:
      return true;
  }
}

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CompositeModulus: return "CompositeModulus";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::UnverifiedPrime: return "UnverifiedPrime";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::BadHeight: return "BadHeight";
    case ErrorCode::PrimeDoesNotContainIdeal: return "PrimeDoesNotContainIdeal";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ImproperPrime: return "ImproperPrime";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace charp
