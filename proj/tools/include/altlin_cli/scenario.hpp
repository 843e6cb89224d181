#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "altlin/linstruct.hpp"

namespace altlin::cli {

struct GridConfig {
    int N = 256;
    double extent = 10.0;
    std::string momentum = "central";  // or "spectral"
};

struct IntegratorConfig {
    double dt = 1e-3;
    double t0 = 0.0;
    double t1 = 6.283185307179586;
};

struct OutputConfig {
    std::string format = "csv";  // "csv" or "svg" (svg adds an overlay plot)
    std::string path = "out";
};

/// One experiment description, loaded from a single JSON document. Unknown
/// keys anywhere in the document are rejected (ConfigError) so configs stay
/// reproducible. The ALTLIN_TOL_SCALE environment variable multiplies every
/// tolerance (default 1).
struct Scenario {
    std::string structure_id = "k-transform";
    double lambda = 0.1;
    double B = 1.0;
    double hbar = 1.0;
    GridConfig grid;
    IntegratorConfig integrator;
    OutputConfig output;
    ToleranceConfig tolerances;
    double tol_scale = 1.0;
    std::vector<Vec> seeds;
    std::uint64_t seed = 0;
    int samples = 1000;

    static Scenario load(const std::filesystem::path& config_path);
    static Scenario from_json_text(const std::string& text);
};

}  // namespace altlin::cli
