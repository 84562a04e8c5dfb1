#include "loopkit/error.hpp"

namespace loopkit {

std::string_view name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::LatinSquareViolation: return "LatinSquareViolation";
    case Errc::IdentityViolation: return "IdentityViolation";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::MalformedTerm: return "MalformedTerm";
    case Errc::NotInClonoid: return "NotInClonoid";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotASubloop: return "NotASubloop";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotCentral: return "NotCentral";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::QuotientNotSupernilpotent: return "QuotientNotSupernilpotent";
    case Errc::CoprimalityViolation: return "CoprimalityViolation";
    case Errc::EvenExponent: return "EvenExponent";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::MalcevIdentityViolation: return "MalcevIdentityViolation";
    case Errc::AssociativityViolation: return "AssociativityViolation";
    case Errc::NoSolution: return "NoSolution";
    case Errc::IterationBound: return "IterationBound";
  }
  return "UnknownError";
}

ErrorCategory category(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError:
    case Errc::LatinSquareViolation:
    case Errc::IdentityViolation:
    case Errc::OrderTooLarge:
    case Errc::MalformedTerm:
    case Errc::NotInClonoid:
      return ErrorCategory::Input;
    case Errc::NotNilpotent:
    case Errc::NotASubloop:
    case Errc::NotNormal:
    case Errc::NotCentral:
    case Errc::NotAssociative:
    case Errc::QuotientNotSupernilpotent:
    case Errc::CoprimalityViolation:
    case Errc::EvenExponent:
      return ErrorCategory::Precondition;
    default:
      return ErrorCategory::Invariant;
  }
}

}  // namespace loopkit
