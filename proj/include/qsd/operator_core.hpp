#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "qsd/errors.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Max-entry deviation of m from its conjugate transpose. Requires m square.
double hermiticity_deviation(const ComplexMatrix& m);

/// A square complex matrix guaranteed Hermitian to working precision.
///
/// Construction checks the max-entry deviation from the adjoint and then
/// stores the symmetrized (m + m^dag)/2, so downstream decompositions never
/// see asymmetry noise.
class HermitianOperator {
  public:
    explicit HermitianOperator(const ComplexMatrix& m,
                               double hermiticity_tol = Tolerances{}.hermiticity);

    const ComplexMatrix& matrix() const noexcept { return mat_; }
    Eigen::Index dim() const noexcept { return mat_.rows(); }
    double trace() const { return mat_.trace().real(); }

  private:
    ComplexMatrix mat_;
};

/// A quantum state: Hermitian, positive-semidefinite, unit trace.
/// Obtainable only through validate_density, so instances always satisfy
/// the invariants within the tolerances they were checked against.
class DensityMatrix {
  public:
    const HermitianOperator& op() const noexcept { return op_; }
    const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
    Eigen::Index dim() const noexcept { return op_.dim(); }

    friend DensityMatrix validate_density(const ComplexMatrix& m, const Tolerances& tol);

  private:
    explicit DensityMatrix(HermitianOperator op) : op_(std::move(op)) {}
    HermitianOperator op_;
};

/// Eigenvalues (ascending) with orthonormal eigenvectors of a Hermitian
/// operator. Eigenvector phases are fixed: the largest-magnitude component
/// of each column is made real and positive, so decompositions are
/// deterministic for a fixed input.
struct SpectralDecomposition {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;  // orthonormal columns

    /// Sum_k lambda_k |phi_k><phi_k|.
    ComplexMatrix reconstruct() const;
};

/// Checks Hermiticity, unit trace, and positive semidefiniteness; the input
/// is symmetrized before the checks. Throws NotHermitian, TraceNotOne, or
/// NotPositiveSemidefinite naming the measured deviation.
DensityMatrix validate_density(const ComplexMatrix& m, const Tolerances& tol = {});

/// Dense Hermitian eigendecomposition. Throws ConvergenceFailure if the
/// solver does not converge.
SpectralDecomposition spectral_decompose(const HermitianOperator& h);

/// Sum of absolute eigenvalues, Tr|h|.
double trace_norm(const HermitianOperator& h);

/// Spectral square root with eigenvalues below zero (but above -psd_tol)
/// clamped to zero. Throws NotPositiveSemidefinite for eigenvalues below
/// the floor.
HermitianOperator psd_sqrt(const HermitianOperator& h, double psd_tol = Tolerances{}.psd);

/// Random mixed state of the given rank: G G^dag / Tr(G G^dag) for a
/// dim x rank matrix G of independent standard complex normal entries.
/// Deterministic per seed; the result passes validate_density.
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);

/// Haar-uniform unit vector, deterministic per seed.
ComplexVector random_pure(int dim, std::uint64_t seed);

/// rows x cols matrix of independent standard complex normal entries.
ComplexMatrix random_ginibre(int rows, int cols, std::uint64_t seed);

/// Mixes a base seed with a stream index (splitmix64 finalizer) so parallel
/// ensemble runs can use independent per-trial generators.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace qsd
