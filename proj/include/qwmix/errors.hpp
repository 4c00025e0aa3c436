#pragma once

#include <stdexcept>
#include <string>

namespace qwmix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A constructor would exceed the configured vertex cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// The eigensolver (or another floating routine) did not converge.
class NumericFailure : public Error {
public:
    using Error::Error;
};

/// A matrix claimed to have a particular structure does not.
class StructureViolation : public Error {
public:
    using Error::Error;
};

/// Raised when asking for mixing times of a parameter set that has none.
class NoMixing : public Error {
public:
    using Error::Error;
};

class InfeasibleParams : public Error {
public:
    using Error::Error;
};

} // namespace qwmix
