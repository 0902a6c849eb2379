#pragma once

#include <stdexcept>
#include <string>

namespace subcolor {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad file, bad parameter, precondition the caller broke.
class InputError : public Error {
public:
    using Error::Error;
};

/// An internal structural assertion failed. Signals a defect or an input
/// representation that does not satisfy its claimed class.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// The exact solver was asked for a search beyond its configured limits.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

/// A construction could not be realized in floating point.
class EmbeddingError : public Error {
public:
    using Error::Error;
};

}  // namespace subcolor
