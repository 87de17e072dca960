#pragma once

#include <stdexcept>
#include <string>

namespace qmzv {

// Every library failure derives from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QMZV_DEFINE_ERROR(Name)              \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    }

QMZV_DEFINE_ERROR(DivisionByZero);
QMZV_DEFINE_ERROR(NotExactlyDivisible);
QMZV_DEFINE_ERROR(ShapeViolation);
QMZV_DEFINE_ERROR(NonInvertibleConstantTerm);
QMZV_DEFINE_ERROR(BadConstantTerm);
QMZV_DEFINE_ERROR(DuplicateAbscissa);
QMZV_DEFINE_ERROR(ZeroInverse);
QMZV_DEFINE_ERROR(ContextMismatch);
QMZV_DEFINE_ERROR(BadParams);
QMZV_DEFINE_ERROR(InsufficientInput);
QMZV_DEFINE_ERROR(UnsupportedLambda);
QMZV_DEFINE_ERROR(BudgetExceeded);
QMZV_DEFINE_ERROR(DegreeMismatch);
QMZV_DEFINE_ERROR(UnsupportedClosedForm);
QMZV_DEFINE_ERROR(ParseError);

#undef QMZV_DEFINE_ERROR

// Raised when a cyclotomic value that must be rational has a nonzero
// coordinate on zeta^k, k >= 1. Carries the printed element.
class NotRational : public Error {
public:
    explicit NotRational(std::string element)
        : Error("value is not rational: " + element), element_(std::move(element)) {}

    const std::string& element() const noexcept { return element_; }

private:
    std::string element_;
};

}  // namespace qmzv
