#pragma once

#include <stdexcept>
#include <string>

namespace mobius {

// Base of every error raised by the library. Input-validation errors carry
// the offending entity in their message.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MOBIUS_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

MOBIUS_DEFINE_ERROR(CycleError)
MOBIUS_DEFINE_ERROR(UnknownElement)
MOBIUS_DEFINE_ERROR(NotComparable)
MOBIUS_DEFINE_ERROR(PosetMismatch)
MOBIUS_DEFINE_ERROR(FieldMismatch)
MOBIUS_DEFINE_ERROR(ShapeMismatch)
MOBIUS_DEFINE_ERROR(NotAComplex)
MOBIUS_DEFINE_ERROR(NotASpread)
MOBIUS_DEFINE_ERROR(NotMonotone)
MOBIUS_DEFINE_ERROR(NotAdjoint)
MOBIUS_DEFINE_ERROR(SizeCap)
MOBIUS_DEFINE_ERROR(ParseError)
MOBIUS_DEFINE_ERROR(FunctorialityError)
MOBIUS_DEFINE_ERROR(UsageError)

#undef MOBIUS_DEFINE_ERROR

}  // namespace mobius
