#pragma once

namespace qsd {

/// Numerical tolerances for the operator-level invariant checks.
///
/// Defaults leave one order of magnitude of safety per composition layer on
/// top of the ~1e-13 accuracy double-precision Hermitian eigensolvers deliver.
struct Tolerances {
    /// Max-entry deviation from the conjugate transpose.
    double hermiticity = 1e-10;
    /// Allowed |Tr(rho) - 1|.
    double trace = 1e-10;
    /// Eigenvalue floor: spectra must stay above -psd.
    double psd = 1e-10;
    /// Frobenius reconstruction error, relative to the input norm.
    double reconstruction = 1e-10;
};

}  // namespace qsd
