#include <catch2/catch_amalgamated.hpp>

#include "test_approx.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qsd/problem_io.hpp"
#include "qsd/pure_vs_uniform.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("qsd_cli_test_" + name);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path capture = temp_path("capture_" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        std::string(QSD_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    REQUIRE(raw != -1);
    CliResult r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(capture)};
    fs::remove(capture);
    return r;
}

fs::path write_scenario_document(const std::string& name, int d, double par, double eta1) {
    const fs::path path = temp_path(name);
    qsd::save_problem_document(
        qsd::document_of(qsd::embed_scenario(qsd::PureVsUniformScenario(d, par, eta1))),
        path.string());
    return path;
}

// Parses the number printed right after `label` in a text report.
double value_after(const std::string& text, const std::string& label) {
    const std::size_t at = text.find(label);
    REQUIRE(at != std::string::npos);
    return std::stod(text.substr(at + label.size()));
}

}  // namespace

TEST_CASE("cli help and usage errors") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("filtering --help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);              // a subcommand is required
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("filtering --d 3").exit_code == 2);  // missing required flags
    CHECK(run_cli("helstrom").exit_code == 2);
}

TEST_CASE("cli filtering") {
    SECTION("full-overlap equal-prior point hits the ratio 2") {
        const CliResult r = run_cli("filtering --d 3 --overlap 1 --eta1 0.25 --json");
        REQUIRE(r.exit_code == 0);
        const nlohmann::json j = nlohmann::json::parse(r.output);
        CHECK(j["p_error"].get<double>() == approx(0.25).margin(1e-12));
        CHECK(j["q_failure"].get<double>() == approx(0.5).margin(1e-12));
        CHECK(j["ratio"].get<double>() == approx(2.0).margin(1e-12));
        CHECK(j["embedding_residual"].get<double>() < 1e-10);
    }
    SECTION("orthogonal case reports an infinite ratio") {
        const CliResult r = run_cli("filtering --d 2 --overlap 0 --eta1 0.5 --json");
        REQUIRE(r.exit_code == 0);
        const nlohmann::json j = nlohmann::json::parse(r.output);
        CHECK(j["p_error"].get<double>() == 0.0);
        CHECK(j["ratio"].get<std::string>() == "inf");
    }
    SECTION("text mode carries the same numbers") {
        const CliResult r = run_cli("filtering --d 1 --overlap 0.6 --eta1 0.5");
        REQUIRE(r.exit_code == 0);
        // Values are printed with %.17g, so parse them back instead of
        // matching a decimal rendering.
        CHECK(value_after(r.output, "p_error = ") == approx(0.1).margin(1e-12));
        CHECK(value_after(r.output, "q_failure = ") == approx(0.6).margin(1e-12));
        CHECK(r.output.find("regime = generalized") != std::string::npos);
    }
    SECTION("out-of-range parameters exit with the validation code") {
        CHECK(run_cli("filtering --d 3 --overlap 1.5 --eta1 0.5").exit_code == 2);
        CHECK(run_cli("filtering --d 0 --overlap 0.5 --eta1 0.5").exit_code == 2);
        CHECK(run_cli("filtering --d 3 --overlap 0.5 --eta1 -0.1").exit_code == 2);
    }
}

TEST_CASE("cli helstrom") {
    const fs::path doc = write_scenario_document("helstrom_doc.json", 3, 0.5, 0.25);

    SECTION("reports the closed-form optimum for the embedded scenario") {
        const CliResult r = run_cli("helstrom --input " + doc.string() + " --json");
        REQUIRE(r.exit_code == 0);
        const nlohmann::json j = nlohmann::json::parse(r.output);
        CHECK(j["p_error"].get<double>() ==
              approx(0.0334936490538903383).margin(1e-12));
        CHECK(j["strategy"].get<std::string>() == "projective_measurement");
        CHECK(j["lambda_spectrum"].size() == 4);
        CHECK(j["pi1"].size() == 4);
    }
    SECTION("writes the report file on request") {
        const fs::path report = temp_path("helstrom_report.json");
        const CliResult r =
            run_cli("helstrom --input " + doc.string() + " --output " + report.string());
        REQUIRE(r.exit_code == 0);
        const nlohmann::json j = nlohmann::json::parse(slurp(report));
        CHECK(j["p_error"].get<double>() ==
              approx(0.0334936490538903383).margin(1e-12));
        fs::remove(report);
    }
    SECTION("I/O failures exit with code 1") {
        CHECK(run_cli("helstrom --input /nonexistent/problem.json").exit_code == 1);
    }
    SECTION("schema and physics violations exit with code 2") {
        const fs::path bad = temp_path("bad.json");
        std::ofstream(bad) << "{ not json";
        CHECK(run_cli("helstrom --input " + bad.string()).exit_code == 2);

        std::ofstream(bad) << R"({"dim":1,"eta1":0.5,"rho1":[[[2,0]]],"rho2":[[[1,0]]]})";
        CHECK(run_cli("helstrom --input " + bad.string()).exit_code == 2);
        fs::remove(bad);
    }
    fs::remove(doc);
}

TEST_CASE("cli bounds") {
    // Pure qubit states with overlap 0.5 at eta1 = 0.1: arithmetic branch.
    qsd::ComplexVector psi1(2), psi2(2);
    psi1 << 1.0, 0.0;
    psi2 << 0.5, std::sqrt(0.75);
    const qsd::DiscriminationProblem p(qsd::validate_density(psi1 * psi1.adjoint()),
                                       qsd::validate_density(psi2 * psi2.adjoint()), 0.1);
    const fs::path doc = temp_path("bounds_doc.json");
    qsd::save_problem_document(qsd::document_of(p), doc.string());

    const CliResult r = run_cli("bounds --input " + doc.string() + " --json");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["fidelity"].get<double>() == approx(0.5).margin(1e-12));
    CHECK(j["branch"].get<std::string>() == "arithmetic_mean");
    CHECK(j["q_lower_branch"].get<double>() == approx(0.325).margin(1e-12));
    CHECK(j["q_lower_overall"].get<double>() == approx(0.3).margin(1e-12));
    CHECK(j["half_inequality_margin"].get<double>() >= -1e-10);
    fs::remove(doc);
}

TEST_CASE("cli sweep") {
    SECTION("fig1 endpoints") {
        const fs::path csv = temp_path("fig1.csv");
        const CliResult r = run_cli("sweep --mode fig1 --steps 101 --output " + csv.string());
        REQUIRE(r.exit_code == 0);

        std::ifstream in(csv);
        std::string line;
        REQUIRE(std::getline(in, line));
        CHECK(line == "param,p_error,q_failure,regime");
        std::string last;
        std::size_t rows = 0;
        while (std::getline(in, line)) {
            last = line;
            ++rows;
        }
        CHECK(rows == 101);
        CHECK(last == "1,0.25,0.5,von_neumann_psi_projection");
        fs::remove(csv);
    }
    SECTION("custom mode sweeps the free parameter") {
        const fs::path csv = temp_path("custom.csv");
        const CliResult r =
            run_cli("sweep --mode custom --d 2 --eta1 0.3 --steps 5 --output " + csv.string());
        REQUIRE(r.exit_code == 0);
        std::ifstream in(csv);
        std::string line;
        std::getline(in, line);  // header
        std::getline(in, line);
        CHECK(line.rfind("0,", 0) == 0);
        std::string last;
        while (std::getline(in, line)) {
            last = line;
        }
        CHECK(last.rfind("1,", 0) == 0);
        fs::remove(csv);
    }
    SECTION("parameter misuse exits with the validation code") {
        const std::string out = " --output " + temp_path("unused.csv").string();
        CHECK(run_cli("sweep --mode custom" + out).exit_code == 2);
        CHECK(run_cli("sweep --mode custom --overlap 0.5 --eta1 0.5" + out).exit_code == 2);
        CHECK(run_cli("sweep --mode fig1 --eta1 0.5" + out).exit_code == 2);
        CHECK(run_cli("sweep --mode nope" + out).exit_code == 2);
        CHECK(run_cli("sweep --mode fig1").exit_code == 2);  // --output is required
    }
    SECTION("unwritable output exits with the I/O code") {
        CHECK(run_cli("sweep --mode fig1 --output /nonexistent/dir/fig1.csv").exit_code == 1);
    }
}

TEST_CASE("cli random-check") {
    SECTION("clean run with machine-readable report") {
        const CliResult r = run_cli("random-check --trials 25 --seed 11 --json");
        REQUIRE(r.exit_code == 0);
        const nlohmann::json j = nlohmann::json::parse(r.output);
        CHECK(j["trials"].get<int>() == 25);
        CHECK(j["violations"].get<int>() == 0);
        CHECK(j["min_margin"].get<double>() >= -1e-10);
        CHECK(j.contains("worst_case"));
    }
    SECTION("identical seeds produce identical bytes") {
        const std::string args = "random-check --trials 25 --dim-min 2 --dim-max 4 --seed 5";
        const CliResult a = run_cli(args);
        const CliResult b = run_cli(args);
        REQUIRE(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
    SECTION("worst case written to a file replays") {
        const fs::path report = temp_path("ensemble.json");
        const CliResult r =
            run_cli("random-check --trials 10 --seed 3 --output " + report.string());
        REQUIRE(r.exit_code == 0);
        const nlohmann::json j = nlohmann::json::parse(slurp(report));
        const qsd::ProblemDocument worst = qsd::problem_document_from_json(j["worst_case"]);
        CHECK_NOTHROW(qsd::realize(worst));
        fs::remove(report);
    }
}
