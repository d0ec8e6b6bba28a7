#pragma once

#include <stdexcept>
#include <string>

namespace charp {

enum class ErrorCode {
  // input errors
  CompositeModulus,
  DuplicateName,
  RingMismatch,
  IncompleteAssignment,
  InvalidArgument,
  DivisionByZero,
  BadSize,
  UnverifiedPrime,
  SyntaxError,
  UnknownIdentifier,
  ImproperPrime,
  // mathematical errors
  OrderViolation,
  UnitIdeal,
  BadHeight,
  PrimeDoesNotContainIdeal,
  RankDeficient,
};

/// Input errors are caller mistakes (bad syntax, bad arguments); everything
/// else is a mathematical outcome the caller asked us to detect.
bool is_input_error(ErrorCode code) noexcept;
const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace charp
