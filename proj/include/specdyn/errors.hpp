#pragma once

#include <stdexcept>
#include <string>

namespace specdyn {

// Base for everything thrown by the library so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVectorError : Error {
    ZeroVectorError() : Error("zero vector has no projective image") {}
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct UndefinedOperationError : Error {
    using Error::Error;
};

struct IndeterminateOrbitError : Error {
    using Error::Error;
};

struct ZeroTchebyshevFactorError : Error {
    using Error::Error;
};

struct NoSolutionError : Error {
    using Error::Error;
};

struct RootFindingFailureError : Error {
    using Error::Error;
};

struct NotInMError : Error {
    using Error::Error;
};

struct NotOnJError : Error {
    using Error::Error;
};

struct NotFixedError : Error {
    using Error::Error;
};

struct VerificationFailureError : Error {
    using Error::Error;
};

struct LevelTooLargeError : Error {
    using Error::Error;
};

struct NonRealWeightsError : Error {
    using Error::Error;
};

struct SchurPreconditionViolatedError : Error {
    using Error::Error;
};

struct InvalidConfigError : Error {
    using Error::Error;
};

struct IOFailureError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace specdyn
