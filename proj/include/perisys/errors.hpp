#pragma once

#include <stdexcept>
#include <string>

namespace perisys {

// Base of every error raised by the library. Each subclass names one failure
// mode from the public contracts so callers can catch precisely.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PERISYS_DEFINE_ERROR(Name) \
  class Name : public Error {      \
   public:                         \
    using Error::Error;            \
  }

PERISYS_DEFINE_ERROR(ZeroValue);
PERISYS_DEFINE_ERROR(DivisionByZero);
PERISYS_DEFINE_ERROR(BitLengthExceeded);
PERISYS_DEFINE_ERROR(SyntaxError);
PERISYS_DEFINE_ERROR(ShapeError);
PERISYS_DEFINE_ERROR(WrongBackend);
PERISYS_DEFINE_ERROR(NotPeriodicRegime);
PERISYS_DEFINE_ERROR(NotOddQuotient);
PERISYS_DEFINE_ERROR(WrongRegime);
PERISYS_DEFINE_ERROR(TooFewPoints);

#undef PERISYS_DEFINE_ERROR

}  // namespace perisys
