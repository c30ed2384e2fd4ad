#pragma once

#include <stdexcept>
#include <string>

namespace fcsa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero field element") {}
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct EmptyGraph : Error {
    using Error::Error;
};

struct InvalidDegree : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct InvalidRho : Error {
    using Error::Error;
};

struct FieldTooSmall : Error {
    using Error::Error;
};

struct DivisibilityViolation : Error {
    using Error::Error;
};

struct TooFewWorkers : Error {
    using Error::Error;
};

struct TooFewResults : Error {
    using Error::Error;
};

struct SubsetBudgetExceeded : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Violation of an internal invariant that valid inputs cannot trigger.
struct InternalError : Error {
    using Error::Error;
};

} // namespace fcsa
