#include "qsd/unambiguous_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qsd {

const char* to_string(BoundBranch b) {
    switch (b) {
        case BoundBranch::GeometricMean: return "geometric_mean";
        case BoundBranch::ArithmeticMean: return "arithmetic_mean";
    }
    return "unknown";
}

namespace {

// Eigenvalues this far (relatively) below the top of the spectrum are treated
// as structural zeros inside the fidelity square roots. The derivative of
// sqrt diverges at 0, so the eigensolver's O(eps) noise on zero eigenvalues
// would otherwise enter the square root as O(sqrt(eps)) ~ 1e-8 and dominate
// the error budget.
constexpr double kSqrtNoiseFloor = 1e-13;

ComplexMatrix noise_floored_sqrt(const DensityMatrix& rho) {
    const SpectralDecomposition sd = spectral_decompose(rho.op());
    const double floor = std::max(0.0, sd.eigenvalues.maxCoeff()) * kSqrtNoiseFloor;
    RealVector roots = RealVector::Zero(sd.eigenvalues.size());
    for (Eigen::Index k = 0; k < sd.eigenvalues.size(); ++k) {
        if (sd.eigenvalues(k) > floor) {
            roots(k) = std::sqrt(sd.eigenvalues(k));
        }
    }
    return sd.eigenvectors * roots.cast<Complex>().asDiagonal() * sd.eigenvectors.adjoint();
}

}  // namespace

double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (rho1.dim() != rho2.dim()) {
        throw DimensionMismatch("fidelity: states have dimensions " +
                                std::to_string(rho1.dim()) + " and " +
                                std::to_string(rho2.dim()));
    }
    // Tr[(sqrt(rho2) rho1 sqrt(rho2))^(1/2)] equals the sum of singular
    // values of sqrt(rho1) sqrt(rho2). The SVD form avoids squaring the
    // factors and taking an outer square root afterwards, which would square
    // small singular values into the eigensolver's noise and lose them.
    const ComplexMatrix c = noise_floored_sqrt(rho1) * noise_floored_sqrt(rho2);
    Eigen::JacobiSVD<ComplexMatrix> svd(c);
    return svd.singularValues().sum();
}

double failure_lower_bound_QL(const DiscriminationProblem& p) {
    return 2.0 * std::sqrt(p.eta1() * p.eta2()) * fidelity(p.rho1(), p.rho2());
}

BranchBound failure_lower_bound_branch(double eta1, double eta2, double fidelity) {
    if (!(eta1 >= 0.0 && eta2 >= 0.0 && std::abs(eta1 + eta2 - 1.0) <= 1e-12)) {
        std::ostringstream os;
        os << "failure_lower_bound_branch: priors " << eta1 << ", " << eta2
           << " must be nonnegative and sum to 1";
        throw InvalidArgument(os.str());
    }
    if (!(fidelity >= 0.0 && fidelity <= 1.0 + 1e-12)) {
        std::ostringstream os;
        os << "failure_lower_bound_branch: fidelity " << fidelity
           << " outside [0, 1]";
        throw InvalidArgument(os.str());
    }
    const double eta_min = std::min(eta1, eta2);
    const double eta_max = std::max(eta1, eta2);
    if (std::sqrt(eta_min / eta_max) >= fidelity) {
        return {2.0 * std::sqrt(eta1 * eta2) * fidelity, BoundBranch::GeometricMean};
    }
    return {eta_min + eta_max * fidelity * fidelity, BoundBranch::ArithmeticMean};
}

BranchBound failure_lower_bound_branch(const DiscriminationProblem& p) {
    return failure_lower_bound_branch(p.eta1(), p.eta2(),
                                      fidelity(p.rho1(), p.rho2()));
}

BoundReport check_half_inequality(const DiscriminationProblem& p) {
    const double f = fidelity(p.rho1(), p.rho2());
    const double ql = 2.0 * std::sqrt(p.eta1() * p.eta2()) * f;
    const BranchBound bb = failure_lower_bound_branch(p.eta1(), p.eta2(), f);
    const HelstromResult hr = helstrom_min_error(p);
    return BoundReport{f, ql, bb.value, bb.branch, hr.p_error, 0.5 * ql - hr.p_error};
}

}  // namespace qsd
