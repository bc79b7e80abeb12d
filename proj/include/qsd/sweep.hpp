#pragma once

#include <string>
#include <vector>

#include "qsd/pure_vs_uniform.hpp"

namespace qsd {

/// Preconfigured parameter sweeps over the pure-vs-uniform scenario, plus a
/// free-form custom mode.
enum class SweepMode {
    Fig1OverlapSweep,  // d = 3, eta1 = 0.25, sweep the parallel norm over [0,1]
    Fig2PriorSweep,    // d = 3, parallel norm = 1, sweep eta1 over [0,1]
    Fig3PriorSweep,    // d = 3, parallel norm = 0.5, sweep eta1 over [0,1]
    Custom,
};

const char* to_string(SweepMode m);

struct SweepGrid {
    double start = 0.0;
    double stop = 1.0;
    int steps = 101;
};

struct SweepSpec {
    SweepMode mode = SweepMode::Custom;
    int d = 3;
    bool sweep_overlap = true;  // swept parameter: parallel norm if true, eta1 if false
    double fixed_value = 0.0;   // the parameter held constant
    SweepGrid grid;
};

SweepSpec fig1_spec(int steps = 101);
SweepSpec fig2_spec(int steps = 101);
SweepSpec fig3_spec(int steps = 101);

struct SweepRow {
    double param;
    double p_error;
    double q_failure;
    FilteringRegime regime;
};

/// Evaluates the closed forms on the uniform grid
/// param_i = start + i (stop - start)/(steps - 1), with the last point pinned
/// to stop exactly. steps = 1 emits only start. Throws InvalidArgument if the
/// grid leaves [0,1], start > stop, steps < 1, or the fixed value is out of
/// range.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// `param,p_error,q_failure,regime` header, numbers at 17 significant digits
/// so a parse-back recovers the doubles exactly. Throws IoError if the path
/// is unwritable.
void write_csv(const std::vector<SweepRow>& rows, const std::string& path);

/// printf "%.17g" rendering used for the CSV columns.
std::string format_g17(double x);

}  // namespace qsd
