#include "qsd/minimum_error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace qsd {

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::ProjectiveMeasurement: return "projective_measurement";
        case Strategy::AlwaysGuessState1: return "always_guess_state1";
        case Strategy::AlwaysGuessState2: return "always_guess_state2";
    }
    return "unknown";
}

namespace {

void check_priors(double eta1, double eta2) {
    if (!(eta1 >= 0.0 && eta1 <= 1.0) || !(eta2 >= 0.0 && eta2 <= 1.0)) {
        throw InvalidArgument("prior probabilities must lie in [0,1]");
    }
    if (std::abs(eta1 + eta2 - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "prior probabilities must sum to 1 within 1e-12, got " << eta1 + eta2;
        throw InvalidArgument(os.str());
    }
}

}  // namespace

DiscriminationProblem::DiscriminationProblem(DensityMatrix rho1, DensityMatrix rho2, double eta1)
    : DiscriminationProblem(std::move(rho1), std::move(rho2), eta1, 1.0 - eta1) {}

DiscriminationProblem::DiscriminationProblem(DensityMatrix rho1, DensityMatrix rho2, double eta1,
                                             double eta2)
    : rho1_(std::move(rho1)), rho2_(std::move(rho2)), eta1_(eta1), eta2_(eta2) {
    check_priors(eta1_, eta2_);
    if (rho1_.dim() != rho2_.dim()) {
        throw DimensionMismatch("states have different dimensions: " +
                                std::to_string(rho1_.dim()) + " vs " +
                                std::to_string(rho2_.dim()));
    }
}

DiscriminationProblem DiscriminationProblem::swapped() const {
    return DiscriminationProblem(rho2_, rho1_, eta2_, eta1_);
}

HermitianOperator weighted_difference(const DiscriminationProblem& p) {
    return HermitianOperator(p.eta2() * p.rho2().matrix() - p.eta1() * p.rho1().matrix());
}

void validate_detection_pair(const DetectionPair& d, const Tolerances& tol) {
    if (d.pi1.dim() != d.pi2.dim()) {
        throw InvalidDetectionPair("detection operators have different dimensions");
    }
    const auto check_psd = [&](const HermitianOperator& pi, const char* name) {
        const double min_eig = spectral_decompose(pi).eigenvalues.minCoeff();
        if (!(min_eig >= -tol.psd)) {
            std::ostringstream os;
            os << name << " is not positive semidefinite: smallest eigenvalue " << min_eig;
            throw InvalidDetectionPair(os.str());
        }
    };
    check_psd(d.pi1, "pi1");
    check_psd(d.pi2, "pi2");

    const Eigen::Index n = d.pi1.dim();
    const ComplexMatrix sum = d.pi1.matrix() + d.pi2.matrix();
    const double dev = (sum - ComplexMatrix::Identity(n, n)).norm();
    const double limit = tol.reconstruction * std::sqrt(static_cast<double>(n));
    if (!(dev <= limit)) {
        std::ostringstream os;
        os << "pi1 + pi2 deviates from the identity by " << dev << " (Frobenius, limit " << limit
           << ")";
        throw InvalidDetectionPair(os.str());
    }
}

double error_probability(const DiscriminationProblem& p, const DetectionPair& d,
                         const Tolerances& tol) {
    if (d.pi1.dim() != p.dim()) {
        throw DimensionMismatch("detection operators have dimension " +
                                std::to_string(d.pi1.dim()) + ", problem has " +
                                std::to_string(p.dim()));
    }
    validate_detection_pair(d, tol);
    const double miss1 = (p.rho1().matrix() * d.pi2.matrix()).trace().real();
    const double miss2 = (p.rho2().matrix() * d.pi1.matrix()).trace().real();
    return p.eta1() * miss1 + p.eta2() * miss2;
}

double zero_threshold_for(const RealVector& spectrum) {
    return 1e-12 * (1.0 + spectrum.cwiseAbs().sum());
}

Strategy classify_strategy(const RealVector& spectrum, double zero_threshold) {
    const bool has_negative = (spectrum.array() < -zero_threshold).any();
    const bool has_positive = (spectrum.array() > zero_threshold).any();
    if (!has_negative) {
        return Strategy::AlwaysGuessState2;
    }
    if (!has_positive) {
        return Strategy::AlwaysGuessState1;
    }
    return Strategy::ProjectiveMeasurement;
}

HelstromResult helstrom_min_error(const DiscriminationProblem& p) {
    const HermitianOperator lambda = weighted_difference(p);
    const SpectralDecomposition sd = spectral_decompose(lambda);

    const double tn = sd.eigenvalues.cwiseAbs().sum();
    const double tau = zero_threshold_for(sd.eigenvalues);

    const Eigen::Index n = lambda.dim();
    ComplexMatrix pi1 = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        if (sd.eigenvalues(k) < -tau) {
            pi1.noalias() += sd.eigenvectors.col(k) * sd.eigenvectors.col(k).adjoint();
        }
    }
    ComplexMatrix pi2 = ComplexMatrix::Identity(n, n) - pi1;

    const double p_error = std::max(0.0, 0.5 * (1.0 - tn));
    return HelstromResult{
        p_error,
        DetectionPair{HermitianOperator(pi1), HermitianOperator(pi2)},
        sd.eigenvalues,
        classify_strategy(sd.eigenvalues, tau),
    };
}

DetectionPair random_detection_pair(Eigen::Index dim, std::uint64_t seed) {
    const ComplexMatrix g = random_ginibre(static_cast<int>(dim), static_cast<int>(dim), seed);
    const HermitianOperator e(0.5 * (g + ComplexMatrix(g.adjoint())));
    const SpectralDecomposition sd = spectral_decompose(e);
    const RealVector clamped = sd.eigenvalues.cwiseMax(0.0).cwiseMin(1.0);
    const ComplexMatrix pi1 =
        sd.eigenvectors * clamped.cast<Complex>().asDiagonal() * sd.eigenvectors.adjoint();
    const ComplexMatrix pi2 = ComplexMatrix::Identity(dim, dim) - pi1;
    return DetectionPair{HermitianOperator(pi1), HermitianOperator(pi2)};
}

}  // namespace qsd
