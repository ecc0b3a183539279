#pragma once

#include <stdexcept>
#include <string>

namespace tworep {

/// Base of every error raised by the library. `kind()` is the stable error
/// name used in CLI diagnostics; `what()` carries the witness.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Raised when a configured size bound is exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

#define TWOREP_DEFINE_ERROR(Name, Base)                                   \
  class Name : public Base {                                              \
   public:                                                                \
    explicit Name(const std::string& message) : Base(#Name, message) {}   \
  }

TWOREP_DEFINE_ERROR(NotAGroup, Error);
TWOREP_DEFINE_ERROR(NotAPermutation, Error);
TWOREP_DEFINE_ERROR(ClosureTooLarge, BoundError);
TWOREP_DEFINE_ERROR(TooLarge, BoundError);
TWOREP_DEFINE_ERROR(NotAMultiple, Error);
TWOREP_DEFINE_ERROR(NotACocycle, Error);
TWOREP_DEFINE_ERROR(NotContained, Error);
TWOREP_DEFINE_ERROR(DegreeZero, Error);
TWOREP_DEFINE_ERROR(NotAHomomorphism, Error);
TWOREP_DEFINE_ERROR(NotAnAction, Error);
TWOREP_DEFINE_ERROR(EquivarianceFailure, Error);
TWOREP_DEFINE_ERROR(PeifferFailure, Error);
TWOREP_DEFINE_ERROR(NotComposable, Error);
TWOREP_DEFINE_ERROR(AmbientMismatch, Error);
TWOREP_DEFINE_ERROR(NotASubgroup, Error);
TWOREP_DEFINE_ERROR(GroupMismatch, Error);
TWOREP_DEFINE_ERROR(AlphaNotHomomorphism, Error);
TWOREP_DEFINE_ERROR(AlphaIllDefined, Error);
TWOREP_DEFINE_ERROR(NotCommuting, Error);
TWOREP_DEFINE_ERROR(NotNormalized, Error);
TWOREP_DEFINE_ERROR(NotScalarMultiple, Error);
TWOREP_DEFINE_ERROR(TripleNotInG, Error);
TWOREP_DEFINE_ERROR(InvalidArgument, Error);
TWOREP_DEFINE_ERROR(ParseError, Error);

#undef TWOREP_DEFINE_ERROR

}  // namespace tworep
