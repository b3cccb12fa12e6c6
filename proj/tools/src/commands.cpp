#include "qisf/app/commands.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "pipeline.hpp"
#include "qisf/app/validation.hpp"
#include "qisf/closed_form.hpp"
#include "qisf/correlators.hpp"
#include "qisf/csv.hpp"
#include "qisf/dsf.hpp"
#include "qisf/errors.hpp"
#include "qisf/units.hpp"

namespace qisf::app {

namespace {

constexpr std::array<std::pair<std::string_view, Command>, 8> command_table{{
    {"kernel", Command::kernel},
    {"modes", Command::modes},
    {"correlate", Command::correlate},
    {"isf", Command::isf},
    {"dsf", Command::dsf},
    {"validate", Command::validate},
    {"figure1", Command::figure1},
    {"figure2", Command::figure2},
}};

std::ofstream open_output(const RunConfig& config, const std::string& name, std::ostream& log) {
    std::filesystem::create_directories(config.output_dir);
    const auto path = config.output_dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw usage_error("output_dir", "cannot write " + path.string());
    log << "wrote " << path.string() << '\n';
    return out;
}

void report_warnings(const std::vector<std::string>& warnings, std::ostream& log) {
    for (const auto& w : warnings) log << "warning: " << w << '\n';
}

detail::ModeModel default_modes(const RunConfig& config, std::ostream& log) {
    const auto sd = detail::density(config);
    std::vector<std::string> warnings;
    auto model = detail::build_modes(config, sd, config.n_modes, detail::omega_max(config, sd), &warnings);
    report_warnings(warnings, log);
    return model;
}

void run_kernel(const RunConfig& config, std::ostream& log) {
    const auto sd = detail::density(config);
    const auto discrete = bath::discretize(sd, config.n_modes, detail::omega_max(config, sd));
    if (discrete.truncation_warning)
        log << "warning: " << 100.0 * discrete.tail_fraction << "% of the kernel weight lies above omega_max\n";
    const TimeGrid grid = config.grid();
    auto out = open_output(config, "kernel.csv", log);
    if (sd.is_drude())
        csv::write_header(out, {"t_ps", "gamma_analytic_ps_inv", "gamma_quadrature_ps_inv", "gamma_discrete_ps_inv"});
    else
        csv::write_header(out, {"t_ps", "gamma_quadrature_ps_inv", "gamma_discrete_ps_inv"});
    for (std::size_t i = grid.origin(); i < grid.size(); ++i) {
        const double t = grid.time(i);
        if (sd.is_drude())
            csv::write_row(out, {t, bath::kernel_analytic(sd, t), bath::kernel_from_density(sd, t), discrete.kernel(t)});
        else
            csv::write_row(out, {t, bath::kernel_from_density(sd, t), discrete.kernel(t)});
    }
}

void run_modes(const RunConfig& config, std::ostream& log) {
    const auto model = default_modes(config, log);
    auto out = open_output(config, "spectrum.csv", log);
    modes::write_spectrum_csv(out, model.spectrum);
}

void run_correlate(const RunConfig& config, std::ostream& log) {
    const auto model = default_modes(config, log);
    const auto table = corr::tabulate(model.spectrum, config.temperature_K, config.grid());
    auto out = open_output(config, "correlators.csv", log);
    corr::write_table_csv(out, table);
}

corr::IsfResult compute_isf(const RunConfig& config, std::ostream& log) {
    const auto model = default_modes(config, log);
    return corr::assemble_isf(model.spectrum, config.temperature_K, config.dK_inv_A, config.grid());
}

void run_isf(const RunConfig& config, std::ostream& log) {
    const auto isf = compute_isf(config, log);
    auto out = open_output(config, "isf.csv", log);
    corr::write_isf_csv(out, isf);
}

void run_dsf(const RunConfig& config, std::ostream& log) {
    if (!config.grid().is_symmetric()) throw usage_error("t_min_ps", "dsf needs a time grid symmetric about 0");
    const auto isf = compute_isf(config, log);
    const auto result = dsf::isf_to_dsf(isf, {config.dsf_window(), true});
    auto out = open_output(config, "dsf.csv", log);
    dsf::write_dsf_csv(out, result);
}

int run_validate(const RunConfig& config, std::ostream& log) {
    const auto report = run_validation(config);
    report_warnings(report.warnings, log);
    for (const auto& c : report.checks)
        log << (c.pass ? "pass " : "FAIL ") << c.name << " = " << csv::format(c.value) << '\n';
    auto out = open_output(config, "validation.json", log);
    out << report.to_json(config).dump(2) << '\n';
    return report.passed() ? exit_code::ok : exit_code::validation;
}

std::string sweep_label(double omega_c) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%g", omega_c);
    return buffer;
}

// Columns: ballistic followed by the ω_c sweep, all from the closed form.
template <class F>
void write_figure(const RunConfig& config, const std::string& file, const std::string& quantity,
                  const std::string& unit, F&& transform, std::ostream& log) {
    const double m = detail::mass_cmu(config);
    const TimeGrid grid = config.grid();
    std::vector<closed_form::ExponentialKernelModel> models;
    for (double wc : figure_omega_c) models.emplace_back(config.gamma_ps_inv, wc, m);

    std::vector<std::string> header{"t_ps", quantity + "_ballistic" + unit};
    for (double wc : figure_omega_c) header.push_back(quantity + "_wc" + sweep_label(wc) + unit);
    auto out = open_output(config, file, log);
    csv::write_header(out, header);
    std::vector<double> row(header.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.time(i);
        row[0] = t;
        row[1] = transform(closed_form::ballistic_recoil(m, t));
        for (std::size_t k = 0; k < models.size(); ++k) row[k + 2] = transform(closed_form::recoil_closed(models[k], t));
        csv::write_row(out, row);
    }
}

void run_figure1(const RunConfig& config, std::ostream& log) {
    write_figure(config, "figure1.csv", "Y", "_A2_per_meVps", [](double y) { return y; }, log);
}

void run_figure2(const RunConfig& config, std::ostream& log) {
    const double phase = 0.5 * units::hbar * config.dK_inv_A * config.dK_inv_A;
    write_figure(config, "figure2.csv", "im_recoil", "", [phase](double y) { return std::sin(phase * y); }, log);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
    for (const auto& [n, c] : command_table)
        if (n == name) return c;
    return std::nullopt;
}

std::string_view command_name(Command command) {
    for (const auto& [n, c] : command_table)
        if (c == command) return n;
    return "?";
}

int run_command(Command command, const RunConfig& config, std::ostream& log) {
    try {
        validate(config);
        switch (command) {
            case Command::kernel: run_kernel(config, log); break;
            case Command::modes: run_modes(config, log); break;
            case Command::correlate: run_correlate(config, log); break;
            case Command::isf: run_isf(config, log); break;
            case Command::dsf: run_dsf(config, log); break;
            case Command::validate: return run_validate(config, log);
            case Command::figure1: run_figure1(config, log); break;
            case Command::figure2: run_figure2(config, log); break;
        }
        return exit_code::ok;
    } catch (const usage_error& e) {
        log << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const qisf::domain_error& e) {
        log << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::filesystem::filesystem_error& e) {
        log << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const qisf::model_error& e) {
        log << "model error: " << e.what() << '\n';
        return exit_code::numerical;
    } catch (const qisf::computation_error& e) {
        log << "numerical failure: " << e.what() << '\n';
        return exit_code::numerical;
    }
}

}  // namespace qisf::app
