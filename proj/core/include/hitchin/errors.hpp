#pragma once

#include <stdexcept>
#include <string>

namespace hitchin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input has the wrong shape: non-square, non-skew, size mismatch, not in the algebra.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A documented precondition does not hold (bad block data, target below the box, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A coefficient beyond the working precision was required.
class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

/// The request is valid but outside what the predicted-image description covers.
class UnsupportedCase : public Error {
public:
    using Error::Error;
};

}  // namespace hitchin
