#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewbrace {

enum class ErrorCode {
  NotClosed,
  NoIdentity,
  NonAssociative,
  MissingInverse,
  ActionNotHomomorphism,
  OrderBoundExceeded,
  GroupInvalid,
  IdentityMismatch,
  DistributivityViolation,
  CocycleIdentityViolation,
  DeltaNotBijective,
  NotAnIdeal,
  MissingZero,
  SolutionInvalid,
  RetractNotWellDefined,
  TranscriptionInvalid,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code and a message naming
// the witnessing elements.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skewbrace
