#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsd/ensemble.hpp"
#include "qsd/minimum_error.hpp"
#include "qsd/problem_io.hpp"
#include "qsd/pure_vs_uniform.hpp"
#include "qsd/sweep.hpp"
#include "qsd/unambiguous_bounds.hpp"

namespace {

nlohmann::json spectrum_json(const qsd::RealVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        a.push_back(v(i));
    }
    return a;
}

void print_matrix(std::ostream& os, const qsd::ComplexMatrix& m) {
    const Eigen::IOFormat fmt(Eigen::FullPrecision, 0, "  ", "\n", "  ");
    os << m.format(fmt) << '\n';
}

void write_report_file(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw qsd::IoError("cannot open for writing: " + path);
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw qsd::IoError("write failed: " + path);
    }
}

void emit(const nlohmann::json& report, bool as_json, const std::string& output_path,
          const std::function<void(std::ostream&)>& print_text) {
    if (as_json) {
        std::cout << report.dump(2) << '\n';
    } else {
        print_text(std::cout);
    }
    if (!output_path.empty()) {
        write_report_file(report, output_path);
    }
}

int cmd_helstrom(const std::string& input, bool as_json, const std::string& output_path) {
    const qsd::DiscriminationProblem problem = qsd::realize(qsd::load_problem_document(input));
    const qsd::HelstromResult r = qsd::helstrom_min_error(problem);

    nlohmann::json report{{"p_error", r.p_error},
                          {"strategy", qsd::to_string(r.strategy)},
                          {"lambda_spectrum", spectrum_json(r.lambda_spectrum)},
                          {"pi1", qsd::matrix_to_json(r.detection.pi1.matrix())},
                          {"pi2", qsd::matrix_to_json(r.detection.pi2.matrix())}};
    emit(report, as_json, output_path, [&](std::ostream& os) {
        os << "p_error = " << qsd::format_g17(r.p_error) << '\n';
        os << "strategy = " << qsd::to_string(r.strategy) << '\n';
        os << "lambda_spectrum =";
        for (Eigen::Index i = 0; i < r.lambda_spectrum.size(); ++i) {
            os << ' ' << qsd::format_g17(r.lambda_spectrum(i));
        }
        os << '\n' << "pi1 =\n";
        print_matrix(os, r.detection.pi1.matrix());
        os << "pi2 =\n";
        print_matrix(os, r.detection.pi2.matrix());
    });
    return 0;
}

int cmd_bounds(const std::string& input, bool as_json, const std::string& output_path) {
    const qsd::DiscriminationProblem problem = qsd::realize(qsd::load_problem_document(input));
    const qsd::BoundReport r = qsd::check_half_inequality(problem);

    nlohmann::json report{{"fidelity", r.fidelity},
                          {"q_lower_overall", r.q_lower_overall},
                          {"q_lower_branch", r.q_lower_branch},
                          {"branch", qsd::to_string(r.branch)},
                          {"p_error", r.p_error},
                          {"half_inequality_margin", r.half_inequality_margin}};
    emit(report, as_json, output_path, [&](std::ostream& os) {
        os << "fidelity = " << qsd::format_g17(r.fidelity) << '\n';
        os << "q_lower_overall = " << qsd::format_g17(r.q_lower_overall) << '\n';
        os << "q_lower_branch = " << qsd::format_g17(r.q_lower_branch) << '\n';
        os << "branch = " << qsd::to_string(r.branch) << '\n';
        os << "p_error = " << qsd::format_g17(r.p_error) << '\n';
        os << "half_inequality_margin = " << qsd::format_g17(r.half_inequality_margin) << '\n';
    });
    return 0;
}

int cmd_filtering(int d, double overlap, double eta1, bool as_json,
                  const std::string& output_path) {
    const qsd::PureVsUniformScenario scenario(d, overlap, eta1);
    const double p_error = qsd::min_error_analytic(scenario);
    const qsd::FilteringResult f = qsd::failure_analytic(scenario);
    const qsd::HelstromResult embedded = qsd::helstrom_min_error(qsd::embed_scenario(scenario));
    const double residual = std::abs(p_error - embedded.p_error);

    nlohmann::json report{{"d", d},
                          {"parallel_norm", overlap},
                          {"eta1", eta1},
                          {"p_error", p_error},
                          {"q_failure", f.q_failure},
                          {"regime", qsd::to_string(f.regime)},
                          {"embedding_residual", residual}};
    if (p_error > 0.0) {
        report["ratio"] = f.q_failure / p_error;
    } else {
        report["ratio"] = "inf";
    }
    emit(report, as_json, output_path, [&](std::ostream& os) {
        os << "p_error = " << qsd::format_g17(p_error) << '\n';
        os << "q_failure = " << qsd::format_g17(f.q_failure) << '\n';
        os << "regime = " << qsd::to_string(f.regime) << '\n';
        os << "ratio = "
           << (p_error > 0.0 ? qsd::format_g17(f.q_failure / p_error) : std::string("inf"))
           << '\n';
        os << "embedding_residual = " << qsd::format_g17(residual) << '\n';
    });
    return 0;
}

int cmd_sweep(const qsd::SweepSpec& spec, const std::string& output, bool as_json) {
    const std::vector<qsd::SweepRow> rows = qsd::run_sweep(spec);
    qsd::write_csv(rows, output);
    if (as_json) {
        nlohmann::json report{
            {"mode", qsd::to_string(spec.mode)}, {"rows", rows.size()}, {"output", output}};
        std::cout << report.dump(2) << '\n';
    } else {
        std::cout << "wrote " << rows.size() << " rows to " << output << '\n';
    }
    return 0;
}

int cmd_random_check(const qsd::EnsembleSpec& spec, bool as_json, const std::string& output_path) {
    const qsd::EnsembleReport report = qsd::run_random_check(spec);
    const nlohmann::json j = to_json(report);
    emit(j, as_json, output_path, [&](std::ostream& os) {
        os << "trials = " << report.spec.trials << '\n';
        os << "dim_min = " << report.spec.dim_min << '\n';
        os << "dim_max = " << report.spec.dim_max << '\n';
        os << "seed = " << report.spec.seed << '\n';
        os << "min_margin = " << qsd::format_g17(report.min_margin) << '\n';
        os << "violations = " << report.violations << '\n';
    });
    if (report.violations > 0) {
        std::cerr << "error: " << report.violations
                  << " trial(s) violated the half inequality beyond slack\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-state quantum discrimination: minimum-error measurement, "
                 "failure-probability bounds, and the exact pure-vs-uniform-mixture solution"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    bool as_json = false;
    int d = 3;
    double overlap = 0.0;
    double eta1 = 0.0;
    std::string mode = "fig1";
    int steps = 101;
    qsd::EnsembleSpec ensemble;

    CLI::App* helstrom = app.add_subcommand(
        "helstrom", "Minimum-error measurement for a problem document");
    helstrom->add_option("--input", input, "problem document (JSON)")->required();
    helstrom->add_option("--output", output, "also write the JSON report here");
    helstrom->add_flag("--json", as_json, "machine-readable stdout");

    CLI::App* bounds = app.add_subcommand(
        "bounds", "Fidelity and failure-probability lower bounds for a problem document");
    bounds->add_option("--input", input, "problem document (JSON)")->required();
    bounds->add_option("--output", output, "also write the JSON report here");
    bounds->add_flag("--json", as_json, "machine-readable stdout");

    CLI::App* filtering = app.add_subcommand(
        "filtering", "Closed-form pure state vs uniform mixture results");
    filtering->add_option("--d", d, "mixture rank")->required();
    filtering->add_option("--overlap", overlap, "parallel norm of the pure state, in [0,1]")
        ->required();
    filtering->add_option("--eta1", eta1, "prior of the pure state")->required();
    filtering->add_option("--output", output, "also write the JSON report here");
    filtering->add_flag("--json", as_json, "machine-readable stdout");

    CLI::App* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
    sweep->add_option("--mode", mode, "fig1, fig2, fig3, or custom")
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "custom"}));
    sweep->add_option("--steps", steps, "grid points over [0,1]")->check(CLI::PositiveNumber);
    sweep->add_option("--d", d, "mixture rank (custom mode)");
    sweep->add_option("--overlap", overlap, "hold the parallel norm fixed, sweep eta1 (custom)");
    sweep->add_option("--eta1", eta1, "hold eta1 fixed, sweep the parallel norm (custom)");
    sweep->add_option("--output", output, "CSV destination")->required();
    sweep->add_flag("--json", as_json, "machine-readable stdout");

    CLI::App* random_check = app.add_subcommand(
        "random-check", "Random ensemble check of the half inequality");
    random_check->add_option("--trials", ensemble.trials, "number of random problems")
        ->check(CLI::PositiveNumber);
    random_check->add_option("--dim-min", ensemble.dim_min, "smallest dimension");
    random_check->add_option("--dim-max", ensemble.dim_max, "largest dimension");
    random_check->add_option("--seed", ensemble.seed, "base seed");
    random_check->add_option("--output", output, "also write the JSON report here");
    random_check->add_flag("--json", as_json, "machine-readable stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (helstrom->parsed()) {
            return cmd_helstrom(input, as_json, output);
        }
        if (bounds->parsed()) {
            return cmd_bounds(input, as_json, output);
        }
        if (filtering->parsed()) {
            return cmd_filtering(d, overlap, eta1, as_json, output);
        }
        if (sweep->parsed()) {
            qsd::SweepSpec spec;
            if (mode == "fig1") {
                spec = qsd::fig1_spec(steps);
            } else if (mode == "fig2") {
                spec = qsd::fig2_spec(steps);
            } else if (mode == "fig3") {
                spec = qsd::fig3_spec(steps);
            } else {
                const bool have_overlap = sweep->count("--overlap") > 0;
                const bool have_eta1 = sweep->count("--eta1") > 0;
                if (have_overlap == have_eta1) {
                    throw qsd::InvalidArgument(
                        "custom sweep: give exactly one of --overlap or --eta1 as the fixed "
                        "parameter; the other is swept over [0,1]");
                }
                spec.mode = qsd::SweepMode::Custom;
                spec.d = d;
                spec.sweep_overlap = have_eta1;
                spec.fixed_value = have_eta1 ? eta1 : overlap;
                spec.grid = {0.0, 1.0, steps};
            }
            if (mode != "custom" &&
                (sweep->count("--d") || sweep->count("--overlap") || sweep->count("--eta1"))) {
                throw qsd::InvalidArgument(
                    "sweep: --d/--overlap/--eta1 apply only to --mode custom; " + mode +
                    " fixes them");
            }
            return cmd_sweep(spec, output, as_json);
        }
        if (random_check->parsed()) {
            return cmd_random_check(ensemble, as_json, output);
        }
    } catch (const qsd::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const qsd::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
