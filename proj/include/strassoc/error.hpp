#pragma once

#include <stdexcept>
#include <string>

namespace strassoc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A letter or string does not belong to the ambient alphabet.
class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

/// Evaluation requested outside X^{<=L}.
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// A table function lacks an entry it should have.
class MissingEntry : public Error {
public:
    using Error::Error;
};

/// An argument is malformed (bad parameter, inconsistent sizes, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An operation was applied to a function of the wrong codomain kind.
class CodomainMismatch : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// The operation does not apply to the given input (e.g. absorbed string of a standard function).
class NotApplicable : public Error {
public:
    using Error::Error;
};

/// A nested evaluation needs a value outside a finite table.
class Unevaluable : public Error {
public:
    using Error::Error;
};

/// Malformed input document; the message carries the JSON location.
class SpecError : public Error {
public:
    using Error::Error;
};

}  // namespace strassoc
