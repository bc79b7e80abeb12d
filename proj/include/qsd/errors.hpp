#pragma once

#include <stdexcept>
#include <string>

namespace qsd {

/// Root of all domain errors: violated invariants, bad parameters,
/// malformed documents. Mapped to exit code 2 by the CLI.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read, or written. Mapped to exit code 1.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotPositiveSemidefinite : Error {
    using Error::Error;
};

struct TraceNotOne : Error {
    using Error::Error;
};

/// The iterative eigensolver did not converge (numerically pathological input).
struct ConvergenceFailure : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidDetectionPair : Error {
    using Error::Error;
};

struct BasisNotOrthonormal : Error {
    using Error::Error;
};

/// Scalar parameter outside its legal range (priors, norms, grid bounds...).
struct InvalidArgument : Error {
    using Error::Error;
};

/// A problem document fails schema validation before any physics is checked.
struct DocumentParseError : Error {
    using Error::Error;
};

}  // namespace qsd
