#pragma once

#include <stdexcept>
#include <string>

namespace cyclocover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic between elements of different fields.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// A quantity that is not defined for the given input (degree of zero, gcd(0, 0), 1/0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Boundary maps that do not compose to zero, or have inconsistent shapes.
class InvalidComplex : public Error {
public:
    using Error::Error;
};

/// Malformed documents, presentations or arguments.
class InputError : public Error {
public:
    using Error::Error;
};

/// The requested analysis is not available for this coefficient field.
class Unsupported : public Error {
public:
    using Error::Error;
};

/// Two independent computations disagreed. Always an implementation bug.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

} // namespace cyclocover
