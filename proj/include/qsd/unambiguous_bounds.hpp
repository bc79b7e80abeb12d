#pragma once

#include "qsd/minimum_error.hpp"
#include "qsd/operator_core.hpp"

namespace qsd {

/// Which line of the two-branch failure-probability bound applies. The two
/// lines are the geometric and the arithmetic mean of the same expressions,
/// so the geometric one is the overall lower bound.
enum class BoundBranch {
    GeometricMean,
    ArithmeticMean,
};

const char* to_string(BoundBranch b);

/// Fidelity, minimum-error probability, and the lower bounds on the
/// unambiguous-discrimination failure probability for one problem.
struct BoundReport {
    double fidelity;                // F(rho1, rho2), in [0,1]
    double q_lower_overall;         // Q_L = 2 sqrt(eta1 eta2) F
    double q_lower_branch;          // prior-dependent branch bound, >= Q_L
    BoundBranch branch;
    double p_error;                 // Helstrom minimum error probability
    double half_inequality_margin;  // Q_L/2 - P_E, nonnegative up to noise
};

/// F(rho1, rho2) = Tr[(sqrt(rho2) rho1 sqrt(rho2))^(1/2)], evaluated as the
/// sum of singular values of sqrt(rho1) sqrt(rho2) (the two agree in exact
/// arithmetic). Eigenvalues sitting at the eigensolver's noise floor are
/// zeroed inside the square roots so that structurally-zero eigenvalues do
/// not leak O(sqrt(eps)) into the result.
double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Overall lower bound on the failure probability: 2 sqrt(eta1 eta2) F.
double failure_lower_bound_QL(const DiscriminationProblem& p);

struct BranchBound {
    double value;
    BoundBranch branch;
};

/// Prior-dependent bound: 2 sqrt(eta1 eta2) F while
/// sqrt(eta_min/eta_max) >= F (ties included), otherwise
/// eta_min + eta_max F^2.
BranchBound failure_lower_bound_branch(const DiscriminationProblem& p);

/// Same bound from already-known priors and fidelity; lets callers probe the
/// branch switchover at exact inputs. Throws InvalidArgument unless the
/// priors are nonnegative, sum to 1 within 1e-12, and F is in [0, 1].
BranchBound failure_lower_bound_branch(double eta1, double eta2, double fidelity);

/// Assembles the full report; half_inequality_margin = Q_L/2 - P_E is the
/// directly checkable form of "the minimum failure probability is at least
/// twice the minimum error probability".
BoundReport check_half_inequality(const DiscriminationProblem& p);

}  // namespace qsd
