#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qisf/app/commands.hpp"
#include "qisf/app/config.hpp"

int main(int argc, char** argv) {
    using namespace qisf::app;

    CLI::App app{"Quantum ISF, recoil function and DSF for a particle coupled to a harmonic bath"};
    app.set_version_flag("--version", "qisf 0.1.0");
    std::string command;
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir;
    app.add_option("command", command, "kernel | modes | correlate | isf | dsf | validate | figure1 | figure2")
        ->required()
        ->check(CLI::IsMember({"kernel", "modes", "correlate", "isf", "dsf", "validate", "figure1", "figure2"}));
    app.add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
    app.add_option("--set", overrides, "override one key, key=value (repeatable)");
    app.add_option("--out", out_dir, "output directory (overrides output_dir)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    RunConfig config;
    try {
        if (!config_path.empty()) read_config(config, std::filesystem::path(config_path));
        for (const auto& assignment : overrides) apply_override(config, assignment);
        if (!out_dir.empty()) config.output_dir = out_dir;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return run_command(*parse_command(command), config, std::cerr);
}
