#pragma once

#include <cstdint>

#include <json.hpp>

#include "qsd/problem_io.hpp"
#include "qsd/unambiguous_bounds.hpp"

namespace qsd {

/// Margins below -kMarginSlack count as violations of the half inequality;
/// smaller excursions are attributed to floating-point noise.
inline constexpr double kMarginSlack = 1e-10;

struct EnsembleSpec {
    int trials = 1;
    int dim_min = 2;
    int dim_max = 8;
    std::uint64_t seed = 0;
};

struct TrialOutcome {
    ProblemDocument document;
    BoundReport report;
};

struct EnsembleReport {
    EnsembleSpec spec;
    double min_margin = 0.0;
    int violations = 0;
    ProblemDocument worst_case;  // the problem attaining min_margin
};

/// One random problem: dimension uniform in [dim_min, dim_max], two states
/// of uniformly random rank, eta1 uniform in (0,1). The generator is derived
/// from (seed, trial_index), so any trial can be recomputed in isolation.
TrialOutcome run_trial(const EnsembleSpec& spec, std::uint64_t trial_index);

/// Runs all trials, tracking the minimum half-inequality margin and the
/// problem attaining it. Throws InvalidArgument on an empty or inverted
/// dimension range or trials < 1.
EnsembleReport run_random_check(const EnsembleSpec& spec);

nlohmann::json to_json(const EnsembleReport& report);

}  // namespace qsd
