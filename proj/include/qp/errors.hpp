#pragma once

#include <stdexcept>
#include <string>

namespace qp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define QP_ERROR_TYPE(Name)                                                    \
    struct Name : Error {                                                      \
        using Error::Error;                                                    \
    }

QP_ERROR_TYPE(SingularMatrixError);  // 2x2 or n x n matrix with det = 0 where invertible required
QP_ERROR_TYPE(ZeroFormError);        // identically-zero binary form
QP_ERROR_TYPE(SizeMismatchError);
QP_ERROR_TYPE(LevelMismatchError);
QP_ERROR_TYPE(WrongLevelError);
QP_ERROR_TYPE(NotDivisorError);
QP_ERROR_TYPE(NotInSliceError);      // some 2x2 column minor vanishes
QP_ERROR_TYPE(DependentPairError);   // the two quadrics do not span a pencil
QP_ERROR_TYPE(NotSmoothError);
QP_ERROR_TYPE(BadPrimeError);
QP_ERROR_TYPE(TooLargeError);
QP_ERROR_TYPE(TooManyPointsError);
QP_ERROR_TYPE(PointsNotDistinctError);
QP_ERROR_TYPE(BadParamsError);
QP_ERROR_TYPE(EvenNError);
QP_ERROR_TYPE(BadGenusError);
QP_ERROR_TYPE(NotOnCurveError);
QP_ERROR_TYPE(ParseError);

#undef QP_ERROR_TYPE

} // namespace qp
