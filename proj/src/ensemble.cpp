#include "qsd/ensemble.hpp"

#include <random>

namespace qsd {

namespace {

void validate_spec(const EnsembleSpec& spec) {
    if (spec.trials < 1) {
        throw InvalidArgument("ensemble: trials must be >= 1");
    }
    if (spec.dim_min < 2 || spec.dim_min > spec.dim_max) {
        throw InvalidArgument("ensemble: need 2 <= dim_min <= dim_max");
    }
}

}  // namespace

TrialOutcome run_trial(const EnsembleSpec& spec, std::uint64_t trial_index) {
    validate_spec(spec);
    std::mt19937_64 rng(derive_seed(spec.seed, trial_index));
    std::uniform_int_distribution<int> dim_dist(spec.dim_min, spec.dim_max);
    const int dim = dim_dist(rng);
    std::uniform_int_distribution<int> rank_dist(1, dim);
    const int rank1 = rank_dist(rng);
    const int rank2 = rank_dist(rng);
    std::uniform_real_distribution<double> eta_dist(0.0, 1.0);
    double eta1 = eta_dist(rng);
    while (eta1 == 0.0) {
        eta1 = eta_dist(rng);
    }
    const DensityMatrix rho1 = random_density(dim, rank1, rng());
    const DensityMatrix rho2 = random_density(dim, rank2, rng());

    const DiscriminationProblem problem(rho1, rho2, eta1);
    return {document_of(problem), check_half_inequality(problem)};
}

EnsembleReport run_random_check(const EnsembleSpec& spec) {
    validate_spec(spec);
    EnsembleReport report;
    report.spec = spec;
    bool first = true;
    for (int t = 0; t < spec.trials; ++t) {
        TrialOutcome outcome = run_trial(spec, static_cast<std::uint64_t>(t));
        const double margin = outcome.report.half_inequality_margin;
        if (margin < -kMarginSlack) {
            ++report.violations;
        }
        if (first || margin < report.min_margin) {
            report.min_margin = margin;
            report.worst_case = std::move(outcome.document);
            first = false;
        }
    }
    return report;
}

nlohmann::json to_json(const EnsembleReport& report) {
    return nlohmann::json{{"trials", report.spec.trials},
                          {"dim_min", report.spec.dim_min},
                          {"dim_max", report.spec.dim_max},
                          {"seed", report.spec.seed},
                          {"min_margin", report.min_margin},
                          {"violations", report.violations},
                          {"worst_case", to_json(report.worst_case)}};
}

}  // namespace qsd
