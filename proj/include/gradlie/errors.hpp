#pragma once

#include <stdexcept>
#include <string>

namespace gradlie {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable kind, e.g. "JacobiViolation".
  [[nodiscard]] virtual const char* kind() const noexcept { return "Error"; }
};

#define GRADLIE_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                               \
   public:                                                                  \
    using Error::Error;                                                     \
    [[nodiscard]] const char* kind() const noexcept override { return #Name; } \
  };

GRADLIE_DEFINE_ERROR(FieldMismatch)
GRADLIE_DEFINE_ERROR(DivisionByZero)
GRADLIE_DEFINE_ERROR(ParseError)
GRADLIE_DEFINE_ERROR(DimensionMismatch)
GRADLIE_DEFINE_ERROR(AmbientMismatch)
GRADLIE_DEFINE_ERROR(AntisymmetryViolation)
GRADLIE_DEFINE_ERROR(JacobiViolation)
GRADLIE_DEFINE_ERROR(GradingViolation)
GRADLIE_DEFINE_ERROR(NotAnIdeal)
GRADLIE_DEFINE_ERROR(NotASubalgebra)
GRADLIE_DEFINE_ERROR(NotGraded)
GRADLIE_DEFINE_ERROR(NotSemiprime)
GRADLIE_DEFINE_ERROR(NotThreeGraded)
GRADLIE_DEFINE_ERROR(NotJordanThreeGraded)
GRADLIE_DEFINE_ERROR(NonzeroCenter)
GRADLIE_DEFINE_ERROR(Undecided)
GRADLIE_DEFINE_ERROR(DimensionTooLarge)
GRADLIE_DEFINE_ERROR(DecompositionIncomplete)
GRADLIE_DEFINE_ERROR(AssociativityViolation)
GRADLIE_DEFINE_ERROR(InvolutionViolation)
GRADLIE_DEFINE_ERROR(NoInvolution)
GRADLIE_DEFINE_ERROR(AxiomViolation)
GRADLIE_DEFINE_ERROR(BadCharacteristic)
GRADLIE_DEFINE_ERROR(NotAPairIdeal)
GRADLIE_DEFINE_ERROR(NotStronglyNondegenerate)
GRADLIE_DEFINE_ERROR(InternalError)

#undef GRADLIE_DEFINE_ERROR

}  // namespace gradlie
