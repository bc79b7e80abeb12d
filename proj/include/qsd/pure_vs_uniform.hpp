#pragma once

#include <vector>

#include "qsd/minimum_error.hpp"
#include "qsd/operator_core.hpp"

namespace qsd {

/// Measurement type realizing the minimum failure probability of
/// unambiguous state filtering in the pure-vs-uniform-mixture problem.
enum class FilteringRegime {
    /// Non-projective POVM (only reachable by a generalized measurement).
    Generalized,
    /// Projection onto the pure state and its orthogonal complement.
    VonNeumannProjectPsiPerp,
    /// Projection onto the support of the mixture and its complement.
    VonNeumannProjectMixtureSupport,
};

const char* to_string(FilteringRegime r);

/// Pure state |psi> with prior eta1 against the uniform mixture of d
/// orthonormal states with prior 1 - eta1. The single geometric parameter
/// is the norm of the component of |psi> inside the mixture's support.
struct PureVsUniformScenario {
    PureVsUniformScenario(int d, double parallel_norm, double eta1);

    int d;
    double parallel_norm;  // in [0, 1]
    double eta1;           // in [0, 1]

    double eta2() const noexcept { return 1.0 - eta1; }
};

struct FilteringResult {
    double q_failure;  // minimum failure probability, in [0, 1]
    FilteringRegime regime;
};

/// Norm of the projection of psi onto the span of the given orthonormal
/// vectors: sqrt(sum_j |<u_j|psi>|^2). Throws BasisNotOrthonormal if the
/// basis Gram matrix deviates from the identity beyond orthonormality_tol.
double parallel_norm_of(const ComplexVector& psi, const std::vector<ComplexVector>& basis,
                        double orthonormality_tol = 1e-10);

/// The d+1 eigenvalues of eta2*rho2 - eta1*rho1 in closed form, ascending:
/// the two from the {v0, v1} block plus d-1 copies of eta2/d.
RealVector lambda_spectrum_analytic(const PureVsUniformScenario& s);

/// Closed-form minimum error probability
/// eta1/2 + eta2/(2d) - sqrt((eta1 + eta2/d)^2 - 4 eta1 (eta2/d) |par|^2)/2.
double min_error_analytic(const PureVsUniformScenario& s);

/// Closed-form minimum failure probability of unambiguous filtering,
/// three branches evaluated in the order von-Neumann (psi projection),
/// von-Neumann (mixture support), generalized; ties keep the first label
/// since the values coincide at the boundaries. parallel_norm = 0 returns
/// (0, Generalized) by convention: orthogonal supports discriminate
/// perfectly.
FilteringResult failure_analytic(const PureVsUniformScenario& s);

/// Explicit (d+1)-dimensional matrices in the basis {v0, u_1, ..., u_d}:
/// rho2 = diag(0, 1/d, ..., 1/d), rho1 = |psi><psi| with the parallel
/// component aligned with u_1. Cross-validates the closed forms against the
/// generic machinery.
DiscriminationProblem embed_scenario(const PureVsUniformScenario& s);

struct EqualPriorValues {
    double p_error;
    double q_failure;
};

/// The equal-prior special case eta1 = eta2/d = 1/(d+1):
/// P_E = (1 - sqrt(1 - |par|^2))/(d+1) and Q_F = 2 |par| / (d+1).
EqualPriorValues equal_prior_specials(int d, double parallel_norm);

}  // namespace qsd
