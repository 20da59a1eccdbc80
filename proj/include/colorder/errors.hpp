#pragma once

#include <stdexcept>
#include <string>

namespace colorder {

// Base of every fault raised by the library. Checks that can fail on valid
// input (axiom violations, theorem mismatches) are reported, not thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COLORDER_DEFINE_ERROR(Name)            \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  }

COLORDER_DEFINE_ERROR(DivisionByZero);
COLORDER_DEFINE_ERROR(ConductorMismatch);
COLORDER_DEFINE_ERROR(NotDivisible);
COLORDER_DEFINE_ERROR(ArityMismatch);
COLORDER_DEFINE_ERROR(AmbientMismatch);
COLORDER_DEFINE_ERROR(DimensionMismatch);
COLORDER_DEFINE_ERROR(NonHomogeneous);
COLORDER_DEFINE_ERROR(TooFewArguments);
COLORDER_DEFINE_ERROR(BadArity);
COLORDER_DEFINE_ERROR(AlgebraMismatch);
COLORDER_DEFINE_ERROR(PreconditionFailed);
COLORDER_DEFINE_ERROR(NotClosed);
COLORDER_DEFINE_ERROR(ConsistencyFault);
COLORDER_DEFINE_ERROR(ParseError);
COLORDER_DEFINE_ERROR(ValidationError);

#undef COLORDER_DEFINE_ERROR

}  // namespace colorder
