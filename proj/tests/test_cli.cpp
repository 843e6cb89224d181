#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "altlin_cli/commands.hpp"
#include "altlin_cli/io.hpp"
#include "altlin_cli/scenario.hpp"

using namespace altlin;
using namespace altlin::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "altlin_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("scenario parsing: defaults, overrides, fail-closed keys") {
    Scenario s = Scenario::from_json_text(R"({"structure_id": "tanh"})");
    CHECK(s.structure_id == "tanh");
    CHECK(s.grid.N == 256);
    CHECK(s.samples == 1000);

    Scenario full = Scenario::from_json_text(R"({
        "structure_id": "k-transform",
        "lambda": 0.25,
        "B": 2.0,
        "hbar": 0.5,
        "grid": {"N": 64, "extent": 7.0, "momentum": "spectral"},
        "integrator": {"dt": 0.01, "t_span": [0.0, 1.0]},
        "tolerances": {"eps_assoc": 1e-8},
        "seeds": [[0.1, 0.2]],
        "seed": 9,
        "samples": 50,
        "output": {"format": "svg", "path": "somewhere"}
    })");
    CHECK(full.lambda == 0.25);
    CHECK(full.grid.momentum == "spectral");
    CHECK(full.tolerances.eps_assoc == 1e-8);
    CHECK(full.tolerances.eps_fd == 1e-6);  // untouched default
    CHECK(full.seeds.size() == 1);
    CHECK(full.output.format == "svg");

    CHECK_THROWS_AS(Scenario::from_json_text(R"({"nope": 1})"), ConfigError);
    CHECK_THROWS_AS(Scenario::from_json_text(R"({"grid": {"NN": 8}})"), ConfigError);
    CHECK_THROWS_AS(Scenario::from_json_text(R"({"structure_id": "unknown"})"), ConfigError);
    CHECK_THROWS_AS(Scenario::from_json_text(R"({"tolerances": {"eps_fd": -1.0}})"),
                    ConfigError);
    CHECK_THROWS_AS(Scenario::from_json_text(R"({"grid": {"N": 7}})"), ConfigError);
    CHECK_THROWS_AS(Scenario::from_json_text("not json"), ConfigError);
    // wrong value types are configuration errors too, not crashes
    CHECK_THROWS_AS(Scenario::from_json_text(R"({"integrator": {"t_span": ["a", "b"]}})"),
                    ConfigError);
    CHECK_THROWS_AS(Scenario::from_json_text(R"({"seeds": [[true]]})"), ConfigError);
    CHECK_THROWS_AS(Scenario::from_json_text(R"({"structure_id": 7})"), ConfigError);
}

TEST_CASE("format_double: deterministic round-trip text") {
    CHECK(format_double(0.0) == "0");
    double values[] = {1.43, -2.8, 1e-9, 3.14159265358979, 0.1};
    for (double v : values) {
        CHECK(std::stod(format_double(v)) == v);
        CHECK(format_double(v) == format_double(v));
    }
}

TEST_CASE("curves command: file fan-out and determinism") {
    Scenario s = Scenario::from_json_text(R"({
        "structure_id": "k-transform",
        "lambda": 0.1,
        "integrator": {"dt": 0.01, "t_span": [0.0, 0.5]},
        "output": {"format": "svg", "path": "unused"}
    })");
    std::ostringstream log;

    fs::path a = fresh_dir("curves_a"), b = fresh_dir("curves_b");
    CHECK(cmd_curves(s, a, log) == kExitPass);
    CHECK(cmd_curves(s, b, log) == kExitPass);

    int count = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        ++count;
        CAPTURE(entry.path().string());
        CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
    }
    CHECK(count == 17);  // 2 fields x 8 default seeds + one svg overlay

    std::string csv = slurp(a / "curve_dQ_s00.csv");
    CHECK(csv.rfind("t,q,p\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);
}

TEST_CASE("magnetic command: summary thresholds and determinism") {
    Scenario s = Scenario::from_json_text(R"({
        "structure_id": "k-transform",
        "B": 1.0,
        "integrator": {"dt": 0.005, "t_span": [0.0, 6.283185307179586]}
    })");
    std::ostringstream log;
    fs::path a = fresh_dir("mag_a"), b = fresh_dir("mag_b");
    CHECK(cmd_magnetic(s, a, log) == kExitPass);
    CHECK(cmd_magnetic(s, b, log) == kExitPass);
    CHECK(slurp(a / "trajectory.csv") == slurp(b / "trajectory.csv"));
    CHECK(slurp(a / "summary.csv") == slurp(b / "summary.csv"));

    // free limit exercises the degenerate branch
    Scenario s0 = Scenario::from_json_text(R"({"structure_id": "k-transform", "B": 0.0})");
    CHECK(cmd_magnetic(s0, fresh_dir("mag_b0"), log) == kExitPass);
}

TEST_CASE("unwritable output surfaces as an io error") {
    Scenario s = Scenario::from_json_text(R"({
        "structure_id": "k-transform",
        "integrator": {"dt": 0.1, "t_span": [0.0, 0.2]}
    })");
    fs::path blocker = fresh_dir("io_error") / "file";
    std::ofstream(blocker) << "plain file";
    std::ostringstream log;
    CHECK_THROWS_AS((void)cmd_curves(s, blocker / "sub", log), IoError);
}

TEST_CASE("axioms command exit codes") {
    std::ostringstream log;
    Scenario good = Scenario::from_json_text(
        R"({"structure_id": "tanh", "samples": 100})");
    CHECK(cmd_axioms(good, log) == kExitPass);

    Scenario bad_lambda = Scenario::from_json_text(
        R"({"structure_id": "k-transform", "lambda": -1.0})");
    CHECK(cmd_axioms(bad_lambda, log) == kExitConfig);
}

TEST_CASE("pinned bounds fail on a coarse grid; ALTLIN_TOL_SCALE loosens them") {
    std::ostringstream log;
    const std::string cfg = R"({
        "structure_id": "k-transform",
        "lambda": 0.1,
        "grid": {"N": 64, "extent": 10.0}
    })";

    // N = 64 cannot meet the commutator bound anchored at N = 256
    Scenario coarse = Scenario::from_json_text(cfg);
    CHECK(cmd_quantum(coarse, fresh_dir("quantum_coarse"), log) == kExitInvariant);

    setenv("ALTLIN_TOL_SCALE", "100", 1);
    Scenario loose = Scenario::from_json_text(cfg);
    unsetenv("ALTLIN_TOL_SCALE");
    CHECK(loose.tol_scale == 100.0);
    CHECK(cmd_quantum(loose, fresh_dir("quantum_loose"), log) == kExitPass);

    setenv("ALTLIN_TOL_SCALE", "banana", 1);
    CHECK_THROWS_AS(Scenario::from_json_text(cfg), ConfigError);
    unsetenv("ALTLIN_TOL_SCALE");
}

TEST_CASE("quantum command: report rows and pass state") {
    Scenario s = Scenario::from_json_text(R"({
        "structure_id": "k-transform",
        "lambda": 0.1,
        "grid": {"N": 512, "extent": 10.0}
    })");
    std::ostringstream log;
    fs::path dir = fresh_dir("quantum");
    CHECK(cmd_quantum(s, dir, log) == kExitPass);
    std::string report = slurp(dir / "quantum_report.csv");
    CHECK(report.find("adjoint_mismatch_residual") != std::string::npos);
    CHECK(report.find("moyal_fitted_order") != std::string::npos);

    // undeformed chart: mismatch collapses, still passes
    Scenario s0 = Scenario::from_json_text(R"({
        "structure_id": "k-transform",
        "lambda": 0.0,
        "grid": {"N": 256, "extent": 10.0}
    })");
    fs::path dir0 = fresh_dir("quantum0");
    CHECK(cmd_quantum(s0, dir0, log) == kExitPass);
    std::string report0 = slurp(dir0 / "quantum_report.csv");
    CHECK(report0.find("adjoint_mismatch_residual,0\n") != std::string::npos);
}
