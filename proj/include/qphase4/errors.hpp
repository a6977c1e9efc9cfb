#pragma once

#include <stdexcept>
#include <string>

namespace qphase4 {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

/// Input outside the domain of an operation (non-symplectic matrix, singular
/// matrix, slope of the zero vector, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A density matrix that is not Hermitian, not unit-trace or not PSD.
struct InvalidState : Error {
    using Error::Error;
};

/// An exhaustive check found a counterexample. The message names the witness.
struct VerificationFailure : Error {
    using Error::Error;
};

}  // namespace qphase4
