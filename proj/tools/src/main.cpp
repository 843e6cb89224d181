#include <CLI11.hpp>
#include <iostream>

#include "altlin_cli/commands.hpp"
#include "altlin_cli/io.hpp"
#include "altlin_cli/scenario.hpp"

namespace cli = altlin::cli;

int main(int argc, char** argv) {
    CLI::App app{"altlin - alternative linear structures toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_override;
    auto add = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--config", config_path, "scenario JSON file")->required();
        sub->add_option("--out", out_override, "output directory (overrides config)");
        return sub;
    };
    CLI::App* axioms = add("axioms", "run the structure axiom suite");
    CLI::App* curves = add("curves", "emit integral curves of the deformed frame fields");
    CLI::App* magnetic = add("magnetic", "charged-particle flow diagnostics and trajectory");
    CLI::App* quantum = add("quantum", "grid-operator and star-product diagnostics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? cli::kExitPass : cli::kExitConfig;
    }

    try {
        cli::Scenario s = cli::Scenario::load(config_path);
        std::filesystem::path out = out_override.empty() ? s.output.path : out_override;

        if (axioms->parsed()) return cli::cmd_axioms(s, std::cout);
        if (curves->parsed()) return cli::cmd_curves(s, out, std::cout);
        if (magnetic->parsed()) return cli::cmd_magnetic(s, out, std::cout);
        if (quantum->parsed()) return cli::cmd_quantum(s, out, std::cout);
    } catch (const altlin::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kExitConfig;
    } catch (const cli::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return cli::kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return cli::kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return cli::kExitInvariant;
    }
    return cli::kExitConfig;
}
