#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loopkit {

// Every failure the library reports carries one of these codes. The CLI maps
// them onto exit codes through category().
enum class Errc {
  // malformed or invalid input (exit 1)
  ParseError,
  LatinSquareViolation,
  IdentityViolation,
  OrderTooLarge,
  MalformedTerm,
  NotInClonoid,
  // precondition violated by a well-formed input (exit 2)
  NotNilpotent,
  NotASubloop,
  NotNormal,
  NotCentral,
  NotAssociative,
  QuotientNotSupernilpotent,
  CoprimalityViolation,
  EvenExponent,
  // a proven statement failed to hold: always an implementation bug (exit 3)
  InternalInvariantViolation,
  InternalInconsistency,
  MalcevIdentityViolation,
  AssociativityViolation,
  NoSolution,
  IterationBound,
};

enum class ErrorCategory { Input = 1, Precondition = 2, Invariant = 3 };

std::string_view name(Errc code) noexcept;
ErrorCategory category(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(category(code_)); }

 private:
  Errc code_;
};

// Throws InternalInvariantViolation naming the failed assertion.
inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InternalInvariantViolation, what);
}

}  // namespace loopkit
