#include "qisf/app/validation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "pipeline.hpp"
#include "qisf/closed_form.hpp"
#include "qisf/correlators.hpp"
#include "qisf/dsf.hpp"
#include "qisf/oracle.hpp"
#include "qisf/units.hpp"

namespace qisf::app {

namespace {

constexpr std::size_t mc_modes = 200;
constexpr double mc_spot_time = 1.0;

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b, double scale = 1.0) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, scale * std::abs(a[i] - b[i]));
    return worst;
}

void route_checks(ValidationReport& report, const RunConfig& config, const TimeGrid& grid,
                  const corr::CorrelatorTable& table, const modes::NormalModeSpectrum& spectrum) {
    const double m = spectrum.mass();

    const auto x_cumulant = corr::x_via_cumulant(spectrum, config.temperature_K, grid);
    double x_scale = 0.0;
    for (double x : table.x) x_scale = std::max(x_scale, std::abs(x));
    report.add("x_route_max_rel", x_scale > 0.0 ? max_abs_diff(table.x, x_cumulant) / x_scale : 0.0,
               Check::Kind::below, 1e-4);

    const auto y_quad = oracle::quad_recoil(table.phi, grid, m);
    report.add("y_quadrature_max_abs", max_abs_diff(table.y, y_quad), Check::Kind::below, 1e-5);

    const std::size_t o = grid.origin();
    if (o >= 1 && o + 1 < grid.size()) {
        const double slope = (table.y[o + 1] - table.y[o - 1]) / (2.0 * grid.step());
        report.add("universal_gradient_rel", std::abs(slope * m - 1.0), Check::Kind::below, 1e-3);
    }

    if (!detail::closed_form_applies(config)) {
        for (const char* name : {"phi_route_max_abs", "mY_route_max_abs", "diffusion_identity_rel", "plateau_rel"})
            report.skipped.push_back({name, "closed form needs a Drude bath with omega0 = 0"});
        return;
    }
    const closed_form::ExponentialKernelModel model(config.gamma_ps_inv, config.omega_c_ps_inv, m);
    std::vector<double> phi_closed(grid.size()), y_closed(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        phi_closed[i] = closed_form::vacf_closed(model, grid.time(i));
        y_closed[i] = closed_form::recoil_closed(model, grid.time(i));
    }
    report.add("phi_route_max_abs", max_abs_diff(table.phi, phi_closed), Check::Kind::below, 1e-3);
    report.add("mY_route_max_abs", max_abs_diff(table.y, y_closed, m), Check::Kind::below, 2e-3);

    if (model.ballistic()) {
        report.skipped.push_back({"diffusion_identity_rel", "gamma = 0"});
        report.skipped.push_back({"plateau_rel", "gamma = 0"});
        return;
    }
    const double kt = units::thermal_energy(config.temperature_K);
    const double d_plateau = kt / (m * config.gamma_ps_inv);
    const double d_green_kubo = kt / m * closed_form::vacf_integral(model);
    report.add("diffusion_identity_rel", std::abs(d_plateau - d_green_kubo) / d_plateau, Check::Kind::below, 1e-10);
    const double plateau = 1.0 / (m * config.gamma_ps_inv);
    report.add("plateau_rel", std::abs(closed_form::recoil_closed(model, grid.t_max()) - plateau) / plateau,
               Check::Kind::below, 2e-2);
}

void isf_checks(ValidationReport& report, const RunConfig& config, const TimeGrid& grid,
                const corr::CorrelatorTable& table) {
    report.add("y_antisymmetry_max_abs",
               [&] {
                   double worst = 0.0;
                   const std::size_t o = grid.origin();
                   const std::size_t half = std::min(o, grid.size() - 1 - o);
                   for (std::size_t i = 1; i <= half; ++i) worst = std::max(worst, std::abs(table.y[o + i] + table.y[o - i]));
                   return worst;
               }(),
               Check::Kind::at_most, 0.0);

    const auto isf = corr::assemble_isf(table.times, table.x, table.y, config.dK_inv_A);
    double modulus = 0.0, hermiticity = 0.0;
    const std::size_t o = grid.origin();
    const std::size_t half = std::min(o, grid.size() - 1 - o);
    for (const auto& v : isf.isf) modulus = std::max(modulus, std::abs(v));
    for (std::size_t i = 1; i <= half; ++i)
        hermiticity = std::max(hermiticity, std::abs(isf.isf[o - i] - std::conj(isf.isf[o + i])));
    report.add("isf_max_modulus", modulus, Check::Kind::at_most, 1.0);
    report.add("isf_hermiticity_max_abs", hermiticity, Check::Kind::at_most, 0.0);

    if (!grid.is_symmetric()) {
        report.skipped.push_back({"detailed_balance_residual", "time grid is not symmetric about 0"});
        report.skipped.push_back({"classical_symmetry_residual", "time grid is not symmetric about 0"});
        return;
    }
    const dsf::TransformOptions options{config.dsf_window(), true};
    const auto quantum = dsf::isf_to_dsf(isf, options);
    report.add("detailed_balance_residual", dsf::detailed_balance_residual(quantum, config.temperature_K),
               Check::Kind::below, 5e-3);
    const std::vector<double> zero(table.times.size(), 0.0);
    const auto classical = dsf::isf_to_dsf(corr::assemble_isf(table.times, table.x, zero, config.dK_inv_A), options);
    report.add("classical_symmetry_residual", dsf::symmetry_residual(classical), Check::Kind::below, 1e-10);
}

void mc_checks(ValidationReport& report, const RunConfig& config, const bath::SpectralDensity& sd) {
    double w_max = detail::omega_max(config, sd);
    if (sd.is_drude())
        w_max = 10.0 * std::max({config.omega_c_ps_inv, config.gamma_ps_inv, config.omega0_ps_inv});
    const auto model = detail::build_modes(config, sd, mc_modes, w_max, nullptr);

    oracle::McConfig mc;
    mc.n_samples = config.mc_samples;
    mc.seed = config.seed;
    mc.temperature = config.temperature_K;
    const auto estimate = oracle::mc_vacf(model.spectrum, mc);

    const bool closed = detail::closed_form_applies(config);
    const closed_form::ExponentialKernelModel exact(std::max(config.gamma_ps_inv, 0.0), config.omega_c_ps_inv,
                                                    model.spectrum.mass());
    const auto reference = [&](double t) {
        return closed ? closed_form::vacf_closed(exact, t) : modes::classical_vacf_modes(model.spectrum, t);
    };

    std::size_t within = 0;
    for (std::size_t j = 0; j < estimate.times.size(); ++j)
        if (std::abs(estimate.phi[j] - reference(estimate.times[j])) < 4.0 * estimate.standard_error[j]) ++within;
    report.add("mc_fraction_within_4_stderr", static_cast<double>(within) / static_cast<double>(estimate.times.size()),
               Check::Kind::at_least, 0.99);

    const auto spot = static_cast<std::size_t>(std::lround(mc_spot_time / mc.grid.step())) + mc.grid.origin();
    report.add("mc_phi_at_1ps_in_stderr", std::abs(estimate.phi[spot] - reference(mc_spot_time)) / estimate.standard_error[spot],
               Check::Kind::below, 3.0);
}

const char* kind_name(Check::Kind kind) {
    switch (kind) {
        case Check::Kind::below: return "<";
        case Check::Kind::at_most: return "<=";
        case Check::Kind::at_least: return ">=";
    }
    return "?";
}

}  // namespace

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void ValidationReport::add(std::string name, double value, Check::Kind kind, double threshold) {
    bool pass = false;
    switch (kind) {
        case Check::Kind::below: pass = value < threshold; break;
        case Check::Kind::at_most: pass = value <= threshold; break;
        case Check::Kind::at_least: pass = value >= threshold; break;
    }
    checks.push_back({kind, std::move(name), value, threshold, pass});
}

nlohmann::json ValidationReport::to_json(const RunConfig& config) const {
    nlohmann::json out;
    out["config"] = {
        {"mass_amu", config.mass_amu},         {"temperature_K", config.temperature_K},
        {"gamma_ps_inv", config.gamma_ps_inv}, {"omega_c_ps_inv", config.omega_c_ps_inv},
        {"omega0_ps_inv", config.omega0_ps_inv}, {"dK_inv_A", config.dK_inv_A},
        {"n_modes", config.n_modes},           {"omega_max_ps_inv", config.omega_max_ps_inv},
        {"t_min_ps", config.t_min_ps},         {"t_max_ps", config.t_max_ps},
        {"n_t", config.n_t},                   {"seed", config.seed},
        {"window", config.window},             {"mc_samples", config.mc_samples},
        {"density_file", config.density_file.string()},
    };
    auto& list = out["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        list.push_back({{"name", c.name}, {"value", c.value}, {"comparison", kind_name(c.kind)},
                        {"threshold", c.threshold}, {"pass", c.pass}});
    auto& skip = out["skipped"] = nlohmann::json::array();
    for (const auto& s : skipped) skip.push_back({{"name", s.name}, {"reason", s.reason}});
    out["warnings"] = warnings;
    out["passed"] = passed();
    return out;
}

ValidationReport run_validation(const RunConfig& config) {
    ValidationReport report;
    const auto sd = detail::density(config);
    const auto model = detail::build_modes(config, sd, config.n_modes, detail::omega_max(config, sd), &report.warnings);
    report.add("weight_sum_residual", std::abs(model.spectrum.weight_sum() - 1.0), Check::Kind::below, 1e-10);

    const TimeGrid grid = config.grid();
    const auto table = corr::tabulate(model.spectrum, config.temperature_K, grid);
    route_checks(report, config, grid, table, model.spectrum);
    isf_checks(report, config, grid, table);
    mc_checks(report, config, sd);
    return report;
}

}  // namespace qisf::app
