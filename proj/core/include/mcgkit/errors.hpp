#pragma once

#include <stdexcept>
#include <string>

namespace mcgkit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MCGKIT_DEFINE_ERROR(Name)               \
  class Name : public Error {                   \
   public:                                      \
    explicit Name(const std::string& what)      \
        : Error(std::string(#Name ": ") + what) {} \
  }

MCGKIT_DEFINE_ERROR(InvalidPresentation);
MCGKIT_DEFINE_ERROR(UnsupportedPresentation);
MCGKIT_DEFINE_ERROR(UnknownGenerator);
MCGKIT_DEFINE_ERROR(DegreeTooLarge);
MCGKIT_DEFINE_ERROR(CosetLimitExceeded);
MCGKIT_DEFINE_ERROR(NotCataloged);
MCGKIT_DEFINE_ERROR(BadParameters);
MCGKIT_DEFINE_ERROR(AssumptionViolated);
MCGKIT_DEFINE_ERROR(IncompatiblePresentation);
MCGKIT_DEFINE_ERROR(MismatchedStructure);
MCGKIT_DEFINE_ERROR(UnsupportedSum);
MCGKIT_DEFINE_ERROR(DimensionMismatch);
MCGKIT_DEFINE_ERROR(NotUnitary);
MCGKIT_DEFINE_ERROR(WrongPresentation);
MCGKIT_DEFINE_ERROR(NotInvolution);
MCGKIT_DEFINE_ERROR(ParseError);
MCGKIT_DEFINE_ERROR(ValidationError);

#undef MCGKIT_DEFINE_ERROR

}  // namespace mcgkit
