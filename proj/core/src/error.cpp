#include "skewbrace/error.hpp"

#include <ostream>

#include "skewbrace/element_set.hpp"

namespace skewbrace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::MissingInverse: return "MissingInverse";
    case ErrorCode::ActionNotHomomorphism: return "ActionNotHomomorphism";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::GroupInvalid: return "GroupInvalid";
    case ErrorCode::IdentityMismatch: return "IdentityMismatch";
    case ErrorCode::DistributivityViolation: return "DistributivityViolation";
    case ErrorCode::CocycleIdentityViolation: return "CocycleIdentityViolation";
    case ErrorCode::DeltaNotBijective: return "DeltaNotBijective";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::MissingZero: return "MissingZero";
    case ErrorCode::SolutionInvalid: return "SolutionInvalid";
    case ErrorCode::RetractNotWellDefined: return "RetractNotWellDefined";
    case ErrorCode::TranscriptionInvalid: return "TranscriptionInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  os << '{';
  bool first = true;
  s.for_each([&](Elem e) {
    if (!first) os << ',';
    os << e;
    first = false;
  });
  return os << '}';
}

}  // namespace skewbrace
