#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RANKONE_DEFINE_ERROR(Name)       \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

RANKONE_DEFINE_ERROR(DivisionByZero);
RANKONE_DEFINE_ERROR(FieldMismatch);
RANKONE_DEFINE_ERROR(InvalidField);
RANKONE_DEFINE_ERROR(NotDivisible);
RANKONE_DEFINE_ERROR(UnsupportedField);
RANKONE_DEFINE_ERROR(DimensionMismatch);
RANKONE_DEFINE_ERROR(InconsistentInvariants);
RANKONE_DEFINE_ERROR(LengthMismatch);
RANKONE_DEFINE_ERROR(InvalidPartition);
RANKONE_DEFINE_ERROR(EqualPartitions);
RANKONE_DEFINE_ERROR(UnboundedChain);
RANKONE_DEFINE_ERROR(NotRankOne);
RANKONE_DEFINE_ERROR(SameInvariants);
RANKONE_DEFINE_ERROR(ShapeMismatch);
RANKONE_DEFINE_ERROR(FieldTooLarge);
RANKONE_DEFINE_ERROR(ShapeTooLarge);
RANKONE_DEFINE_ERROR(ParseError);

#undef RANKONE_DEFINE_ERROR

}  // namespace rankone
