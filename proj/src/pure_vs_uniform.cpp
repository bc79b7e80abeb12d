#include "qsd/pure_vs_uniform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qsd {

const char* to_string(FilteringRegime r) {
    switch (r) {
        case FilteringRegime::Generalized: return "generalized";
        case FilteringRegime::VonNeumannProjectPsiPerp: return "von_neumann_psi_projection";
        case FilteringRegime::VonNeumannProjectMixtureSupport:
            return "von_neumann_support_projection";
    }
    return "unknown";
}

PureVsUniformScenario::PureVsUniformScenario(int d_, double parallel_norm_, double eta1_)
    : d(d_), parallel_norm(parallel_norm_), eta1(eta1_) {
    if (d < 1) {
        throw InvalidArgument("scenario: d must be a positive integer");
    }
    if (!(parallel_norm >= 0.0 && parallel_norm <= 1.0)) {
        std::ostringstream os;
        os << "scenario: parallel norm must lie in [0,1], got " << parallel_norm;
        throw InvalidArgument(os.str());
    }
    if (!(eta1 >= 0.0 && eta1 <= 1.0)) {
        std::ostringstream os;
        os << "scenario: eta1 must lie in [0,1], got " << eta1;
        throw InvalidArgument(os.str());
    }
}

double parallel_norm_of(const ComplexVector& psi, const std::vector<ComplexVector>& basis,
                        double orthonormality_tol) {
    for (const auto& u : basis) {
        if (u.size() != psi.size()) {
            throw DimensionMismatch("parallel_norm_of: basis vector of dimension " +
                                    std::to_string(u.size()) + ", state has " +
                                    std::to_string(psi.size()));
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const Complex g = basis[i].dot(basis[j]);
            const double expected = (i == j) ? 1.0 : 0.0;
            const double dev = std::abs(g - expected);
            if (!(dev <= orthonormality_tol)) {
                std::ostringstream os;
                os << "Gram entry (" << i << "," << j << ") deviates from "
                   << (i == j ? "1" : "0") << " by " << dev;
                throw BasisNotOrthonormal(os.str());
            }
        }
    }
    double sum = 0.0;
    for (const auto& u : basis) {
        sum += std::norm(u.dot(psi));
    }
    return std::sqrt(sum);
}

namespace {

// (a + b)^2 - 4ab s^2 rewritten as (a - b)^2 + 4ab(1 - s^2): both terms are
// nonnegative for s <= 1, so there is no cancellation near the degenerate
// boundary s = 1, a = b.
double discriminant_root(double a, double b, double s) {
    const double disc = (a - b) * (a - b) + 4.0 * a * b * std::max(0.0, 1.0 - s * s);
    return std::sqrt(disc);
}

}  // namespace

RealVector lambda_spectrum_analytic(const PureVsUniformScenario& s) {
    const double a = s.eta2() / s.d;
    const double b = s.eta1;
    const double root = discriminant_root(a, b, s.parallel_norm);

    RealVector out(s.d + 1);
    out(0) = 0.5 * ((a - b) - root);
    out(1) = 0.5 * ((a - b) + root);
    for (int k = 2; k <= s.d; ++k) {
        out(k) = a;
    }
    std::sort(out.data(), out.data() + out.size());
    return out;
}

double min_error_analytic(const PureVsUniformScenario& s) {
    const double a = s.eta2() / s.d;
    const double b = s.eta1;
    return std::max(0.0, 0.5 * (a + b) - 0.5 * discriminant_root(a, b, s.parallel_norm));
}

FilteringResult failure_analytic(const PureVsUniformScenario& s) {
    if (s.parallel_norm == 0.0) {
        return {0.0, FilteringRegime::Generalized};
    }
    const double s2 = s.parallel_norm * s.parallel_norm;
    const double eta1 = s.eta1;
    const double eta2 = s.eta2();
    const double d = static_cast<double>(s.d);

    // Branch conditions in multiplied-out form so eta1 = 0 stays finite.
    if (eta2 * s2 >= eta1 * d) {
        return {eta1 + (eta2 / d) * s2, FilteringRegime::VonNeumannProjectPsiPerp};
    }
    if (eta2 <= eta1 * d * s2) {
        return {eta1 * s2 + eta2 / d, FilteringRegime::VonNeumannProjectMixtureSupport};
    }
    return {2.0 * std::sqrt(eta1 * eta2 / d) * s.parallel_norm, FilteringRegime::Generalized};
}

DiscriminationProblem embed_scenario(const PureVsUniformScenario& s) {
    const int n = s.d + 1;
    ComplexMatrix rho2 = ComplexMatrix::Zero(n, n);
    for (int j = 1; j <= s.d; ++j) {
        rho2(j, j) = Complex(1.0 / s.d, 0.0);
    }

    ComplexVector psi = ComplexVector::Zero(n);
    psi(0) = Complex(std::sqrt(std::max(0.0, 1.0 - s.parallel_norm * s.parallel_norm)), 0.0);
    psi(1) = Complex(s.parallel_norm, 0.0);
    const ComplexMatrix rho1 = psi * psi.adjoint();

    return DiscriminationProblem(validate_density(rho1), validate_density(rho2), s.eta1);
}

EqualPriorValues equal_prior_specials(int d, double parallel_norm) {
    if (d < 1) {
        throw InvalidArgument("equal_prior_specials: d must be a positive integer");
    }
    if (!(parallel_norm >= 0.0 && parallel_norm <= 1.0)) {
        throw InvalidArgument("equal_prior_specials: parallel norm must lie in [0,1]");
    }
    const double one_over = 1.0 / (d + 1.0);
    const double p_error =
        one_over * (1.0 - std::sqrt(std::max(0.0, 1.0 - parallel_norm * parallel_norm)));
    const double q_failure = 2.0 * parallel_norm * one_over;
    return {p_error, q_failure};
}

}  // namespace qsd
