#pragma once

#include <cstdint>

#include "qsd/operator_core.hpp"

namespace qsd {

/// How the error-minimizing measurement is realized. When the weighted
/// difference of the states has eigenvalues of only one sign, no measurement
/// beats always guessing the corresponding state.
enum class Strategy {
    ProjectiveMeasurement,
    AlwaysGuessState1,
    AlwaysGuessState2,
};

const char* to_string(Strategy s);

/// Two-hypothesis setting: states rho1, rho2 with prior probabilities
/// eta1 + eta2 = 1.
class DiscriminationProblem {
  public:
    /// eta2 is implied as 1 - eta1.
    DiscriminationProblem(DensityMatrix rho1, DensityMatrix rho2, double eta1);
    /// Explicit priors; |eta1 + eta2 - 1| must stay within 1e-12.
    DiscriminationProblem(DensityMatrix rho1, DensityMatrix rho2, double eta1, double eta2);

    const DensityMatrix& rho1() const noexcept { return rho1_; }
    const DensityMatrix& rho2() const noexcept { return rho2_; }
    double eta1() const noexcept { return eta1_; }
    double eta2() const noexcept { return eta2_; }
    Eigen::Index dim() const noexcept { return rho1_.dim(); }

    /// The same problem with the roles of the two hypotheses exchanged.
    DiscriminationProblem swapped() const;

  private:
    DensityMatrix rho1_;
    DensityMatrix rho2_;
    double eta1_;
    double eta2_;
};

/// Detection operators of an exhaustive two-outcome measurement:
/// both positive semidefinite, pi1 + pi2 = identity.
struct DetectionPair {
    HermitianOperator pi1;
    HermitianOperator pi2;
};

/// Throws InvalidDetectionPair if either operator fails PSD (within tol.psd)
/// or the pair does not sum to the identity (within tol.reconstruction,
/// relative to ||I||_F).
void validate_detection_pair(const DetectionPair& d, const Tolerances& tol = {});

struct HelstromResult {
    double p_error;               // minimum error probability, in [0, 1/2]
    DetectionPair detection;      // optimal detection operators
    RealVector lambda_spectrum;   // spectrum of eta2*rho2 - eta1*rho1, ascending
    Strategy strategy;
};

/// The Hermitian operator eta2*rho2 - eta1*rho1 whose spectrum determines
/// the optimal measurement. Its trace is eta2 - eta1.
HermitianOperator weighted_difference(const DiscriminationProblem& p);

/// Probability of guessing wrong under the given measurement:
/// eta1*Tr(rho1 pi2) + eta2*Tr(rho2 pi1). Validates the pair first.
double error_probability(const DiscriminationProblem& p, const DetectionPair& d,
                         const Tolerances& tol = {});

/// Scale-aware noise floor for eigenvalue sign classification.
double zero_threshold_for(const RealVector& spectrum);

/// AlwaysGuessState2 if no eigenvalue drops below -zero_threshold (checked
/// first, so an all-zero spectrum lands here), AlwaysGuessState1 if none
/// exceeds +zero_threshold, otherwise ProjectiveMeasurement.
Strategy classify_strategy(const RealVector& spectrum, double zero_threshold);

/// Minimum-error measurement: p_error = (1 - Tr|eta2*rho2 - eta1*rho1|)/2,
/// pi1 projects onto the strictly negative part of the spectrum and pi2 onto
/// the rest (zero-eigenvalue directions are assigned to pi2 so the output is
/// deterministic).
HelstromResult helstrom_min_error(const DiscriminationProblem& p);

/// Random valid measurement for suboptimality spot checks: a random Hermitian
/// with its spectrum clamped into [0,1] and its complement to the identity.
DetectionPair random_detection_pair(Eigen::Index dim, std::uint64_t seed);

}  // namespace qsd
