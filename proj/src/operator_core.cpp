#include "qsd/operator_core.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qsd {

namespace {

std::string format_dev(double dev) {
    std::ostringstream os;
    os.precision(6);
    os << dev;
    return os.str();
}

}  // namespace

double hermiticity_deviation(const ComplexMatrix& m) {
    return (m - ComplexMatrix(m.adjoint())).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m, double hermiticity_tol) {
    if (m.rows() == 0 || m.cols() == 0) {
        throw InvalidArgument("HermitianOperator: matrix must be at least 1x1");
    }
    if (m.rows() != m.cols()) {
        throw NotHermitian("matrix is not square: " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()));
    }
    const double dev = hermiticity_deviation(m);
    if (!(dev <= hermiticity_tol)) {
        throw NotHermitian("max-entry deviation from the conjugate transpose is " +
                           format_dev(dev) + " (tolerance " + format_dev(hermiticity_tol) + ")");
    }
    mat_ = 0.5 * (m + ComplexMatrix(m.adjoint()));
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

DensityMatrix validate_density(const ComplexMatrix& m, const Tolerances& tol) {
    HermitianOperator h(m, tol.hermiticity);
    const double tr = h.trace();
    if (!(std::abs(tr - 1.0) <= tol.trace)) {
        throw TraceNotOne("trace is " + format_dev(tr) + ", deviation " +
                          format_dev(std::abs(tr - 1.0)) + " exceeds tolerance " +
                          format_dev(tol.trace));
    }
    const SpectralDecomposition sd = spectral_decompose(h);
    const double min_eig = sd.eigenvalues.minCoeff();
    if (!(min_eig >= -tol.psd)) {
        throw NotPositiveSemidefinite("smallest eigenvalue is " + format_dev(min_eig) +
                                      ", below the -" + format_dev(tol.psd) + " floor");
    }
    return DensityMatrix(std::move(h));
}

SpectralDecomposition spectral_decompose(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw ConvergenceFailure("Hermitian eigensolver failed to converge at dim " +
                                 std::to_string(h.dim()));
    }
    SpectralDecomposition sd{solver.eigenvalues(), solver.eigenvectors()};
    // Phase convention: largest-magnitude component real and positive.
    for (Eigen::Index k = 0; k < sd.eigenvectors.cols(); ++k) {
        Eigen::Index imax = 0;
        sd.eigenvectors.col(k).cwiseAbs().maxCoeff(&imax);
        const Complex c = sd.eigenvectors(imax, k);
        const double a = std::abs(c);
        if (a > 0.0) {
            sd.eigenvectors.col(k) *= std::conj(c) / a;
        }
    }
    return sd;
}

double trace_norm(const HermitianOperator& h) {
    return spectral_decompose(h).eigenvalues.cwiseAbs().sum();
}

HermitianOperator psd_sqrt(const HermitianOperator& h, double psd_tol) {
    SpectralDecomposition sd = spectral_decompose(h);
    const double min_eig = sd.eigenvalues.minCoeff();
    if (!(min_eig >= -psd_tol)) {
        throw NotPositiveSemidefinite("smallest eigenvalue is " + format_dev(min_eig) +
                                      ", below the -" + format_dev(psd_tol) + " floor");
    }
    RealVector roots = sd.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    ComplexMatrix root = sd.eigenvectors * roots.cast<Complex>().asDiagonal() *
                         sd.eigenvectors.adjoint();
    return HermitianOperator(root);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ComplexMatrix random_ginibre(int rows, int cols, std::uint64_t seed) {
    if (rows < 1 || cols < 1) {
        throw InvalidArgument("random_ginibre: dimensions must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
    if (dim < 1) {
        throw InvalidArgument("random_density: dim must be positive");
    }
    if (rank < 1 || rank > dim) {
        throw InvalidArgument("random_density: rank must lie in [1, dim]");
    }
    const ComplexMatrix g = random_ginibre(dim, rank, seed);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return validate_density(m);
}

ComplexVector random_pure(int dim, std::uint64_t seed) {
    if (dim < 1) {
        throw InvalidArgument("random_pure: dim must be positive");
    }
    ComplexVector v = random_ginibre(dim, 1, seed).col(0);
    return v / v.norm();
}

}  // namespace qsd
