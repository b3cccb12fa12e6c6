// commands.hpp: command dispatch for the qisf tool

#pragma once

#include <optional>
#include <ostream>
#include <string_view>

#include "qisf/app/config.hpp"

namespace qisf::app {

enum class Command { kernel, modes, correlate, isf, dsf, validate, figure1, figure2 };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int validation = 2;
inline constexpr int numerical = 3;
}  // namespace exit_code

// ω_c values of the figure sweeps (ps⁻¹).
inline constexpr double figure_omega_c[] = {0.2, 1.0, 5.0, 50.0};

// Runs one command, writing its output file(s) into config.output_dir and a
// short summary to `log`. Errors are mapped onto the exit codes above.
int run_command(Command command, const RunConfig& config, std::ostream& log);

}  // namespace qisf::app
