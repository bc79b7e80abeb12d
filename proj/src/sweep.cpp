#include "qsd/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qsd {

const char* to_string(SweepMode m) {
    switch (m) {
        case SweepMode::Fig1OverlapSweep: return "fig1";
        case SweepMode::Fig2PriorSweep: return "fig2";
        case SweepMode::Fig3PriorSweep: return "fig3";
        case SweepMode::Custom: return "custom";
    }
    return "unknown";
}

SweepSpec fig1_spec(int steps) {
    return {SweepMode::Fig1OverlapSweep, 3, true, 0.25, {0.0, 1.0, steps}};
}

SweepSpec fig2_spec(int steps) {
    return {SweepMode::Fig2PriorSweep, 3, false, 1.0, {0.0, 1.0, steps}};
}

SweepSpec fig3_spec(int steps) {
    return {SweepMode::Fig3PriorSweep, 3, false, 0.5, {0.0, 1.0, steps}};
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.d < 1) {
        throw InvalidArgument("sweep: d must be a positive integer");
    }
    if (spec.grid.steps < 1) {
        throw InvalidArgument("sweep: steps must be >= 1");
    }
    if (!(spec.grid.start >= 0.0 && spec.grid.stop <= 1.0 && spec.grid.start <= spec.grid.stop)) {
        std::ostringstream os;
        os << "sweep: grid [" << spec.grid.start << ", " << spec.grid.stop
           << "] must satisfy 0 <= start <= stop <= 1";
        throw InvalidArgument(os.str());
    }
    if (!(spec.fixed_value >= 0.0 && spec.fixed_value <= 1.0)) {
        throw InvalidArgument("sweep: fixed parameter must lie in [0,1]");
    }

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.grid.steps));
    for (int i = 0; i < spec.grid.steps; ++i) {
        double param = spec.grid.start;
        if (spec.grid.steps > 1) {
            param = (i == spec.grid.steps - 1)
                        ? spec.grid.stop
                        : spec.grid.start +
                              i * (spec.grid.stop - spec.grid.start) / (spec.grid.steps - 1);
        }
        const PureVsUniformScenario scenario =
            spec.sweep_overlap ? PureVsUniformScenario(spec.d, param, spec.fixed_value)
                               : PureVsUniformScenario(spec.d, spec.fixed_value, param);
        const FilteringResult f = failure_analytic(scenario);
        rows.push_back({param, min_error_analytic(scenario), f.q_failure, f.regime});
    }
    return rows;
}

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out << "param,p_error,q_failure,regime\n";
    for (const auto& row : rows) {
        out << format_g17(row.param) << ',' << format_g17(row.p_error) << ','
            << format_g17(row.q_failure) << ',' << to_string(row.regime) << '\n';
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

}  // namespace qsd
