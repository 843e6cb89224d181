#include "altlin_cli/scenario.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "altlin/catalog.hpp"

namespace altlin::cli {

using nlohmann::json;

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

double get_number(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ConfigError(std::string(key) + " must be a number");
    return j[key].get<double>();
}

}  // namespace

namespace {

Scenario parse_scenario(const json& j);

}  // namespace

Scenario Scenario::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        return parse_scenario(j);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config value: ") + e.what());
    }
}

namespace {

Scenario parse_scenario(const json& j) {
    check_keys(j,
               {"structure_id", "lambda", "B", "hbar", "grid", "integrator", "tolerances",
                "seeds", "seed", "samples", "output"},
               "top level");

    Scenario s;
    if (j.contains("structure_id")) {
        if (!j["structure_id"].is_string()) throw ConfigError("structure_id must be a string");
        s.structure_id = j["structure_id"].get<std::string>();
    }
    bool known = false;
    for (const auto& id : catalog_ids())
        if (id == s.structure_id) known = true;
    if (!known) throw ConfigError("unknown structure_id: " + s.structure_id);

    s.lambda = get_number(j, "lambda", s.lambda);
    s.B = get_number(j, "B", s.B);
    s.hbar = get_number(j, "hbar", s.hbar);

    if (j.contains("grid")) {
        const json& g = j["grid"];
        check_keys(g, {"N", "extent", "momentum"}, "grid");
        s.grid.N = static_cast<int>(get_number(g, "N", s.grid.N));
        s.grid.extent = get_number(g, "extent", s.grid.extent);
        if (g.contains("momentum")) {
            s.grid.momentum = g["momentum"].get<std::string>();
            if (s.grid.momentum != "central" && s.grid.momentum != "spectral")
                throw ConfigError("grid.momentum must be 'central' or 'spectral'");
        }
        if (s.grid.N < 8 || s.grid.N % 2 != 0)
            throw ConfigError("grid.N must be even and >= 8");
        if (!(s.grid.extent > 0)) throw ConfigError("grid.extent must be positive");
    }

    if (j.contains("integrator")) {
        const json& g = j["integrator"];
        check_keys(g, {"dt", "t_span"}, "integrator");
        s.integrator.dt = get_number(g, "dt", s.integrator.dt);
        if (!(s.integrator.dt > 0)) throw ConfigError("integrator.dt must be positive");
        if (g.contains("t_span")) {
            if (!g["t_span"].is_array() || g["t_span"].size() != 2)
                throw ConfigError("integrator.t_span must be [t0, t1]");
            s.integrator.t0 = g["t_span"][0].get<double>();
            s.integrator.t1 = g["t_span"][1].get<double>();
            if (!(s.integrator.t1 >= s.integrator.t0))
                throw ConfigError("integrator.t_span must be ascending");
        }
    }

    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        check_keys(t, {"eps_round", "eps_fd", "eps_assoc", "eps_flow", "eps_lin"}, "tolerances");
        s.tolerances.eps_round = get_number(t, "eps_round", s.tolerances.eps_round);
        s.tolerances.eps_fd = get_number(t, "eps_fd", s.tolerances.eps_fd);
        s.tolerances.eps_assoc = get_number(t, "eps_assoc", s.tolerances.eps_assoc);
        s.tolerances.eps_flow = get_number(t, "eps_flow", s.tolerances.eps_flow);
        s.tolerances.eps_lin = get_number(t, "eps_lin", s.tolerances.eps_lin);
        for (double v : {s.tolerances.eps_round, s.tolerances.eps_fd, s.tolerances.eps_assoc,
                         s.tolerances.eps_flow, s.tolerances.eps_lin})
            if (!(v > 0)) throw ConfigError("tolerances must be positive");
    }

    if (j.contains("seeds")) {
        if (!j["seeds"].is_array()) throw ConfigError("seeds must be an array of points");
        for (const auto& pt : j["seeds"]) {
            if (!pt.is_array() || pt.empty()) throw ConfigError("each seed must be an array");
            Vec v(pt.size());
            for (std::size_t i = 0; i < pt.size(); ++i) v(i) = pt[i].get<double>();
            s.seeds.push_back(std::move(v));
        }
    }

    if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) {
        s.samples = static_cast<int>(get_number(j, "samples", s.samples));
        if (s.samples <= 0) throw ConfigError("samples must be positive");
    }

    if (j.contains("output")) {
        const json& o = j["output"];
        check_keys(o, {"format", "path"}, "output");
        if (o.contains("format")) {
            s.output.format = o["format"].get<std::string>();
            if (s.output.format != "csv" && s.output.format != "svg")
                throw ConfigError("output.format must be 'csv' or 'svg'");
        }
        if (o.contains("path")) s.output.path = o["path"].get<std::string>();
    }

    if (const char* scale = std::getenv("ALTLIN_TOL_SCALE")) {
        try {
            s.tol_scale = std::stod(scale);
        } catch (const std::exception&) {
            throw ConfigError("ALTLIN_TOL_SCALE is not a number");
        }
        if (!(s.tol_scale > 0)) throw ConfigError("ALTLIN_TOL_SCALE must be positive");
    }

    return s;
}

}  // namespace

Scenario Scenario::load(const std::filesystem::path& config_path) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file: " + config_path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

}  // namespace altlin::cli
