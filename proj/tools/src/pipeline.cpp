#include "pipeline.hpp"

#include <sstream>

#include "qisf/units.hpp"

namespace qisf::app::detail {

double mass_cmu(const RunConfig& config) { return units::mass_cmu(config.mass_amu); }

bath::SpectralDensity density(const RunConfig& config) {
    if (!config.density_file.empty()) return bath::SpectralDensity::read_table(config.density_file, mass_cmu(config));
    return bath::SpectralDensity::drude(config.gamma_ps_inv, config.omega_c_ps_inv, mass_cmu(config));
}

double omega_max(const RunConfig& config, const bath::SpectralDensity& sd) {
    return config.omega_max_ps_inv > 0.0 ? config.omega_max_ps_inv : bath::default_omega_max(sd, config.omega0_ps_inv);
}

ModeModel build_modes(const RunConfig& config, const bath::SpectralDensity& sd, std::size_t n_modes, double omega_max,
                      std::vector<std::string>* warnings) {
    auto discrete = bath::discretize(sd, n_modes, omega_max);
    if (discrete.truncation_warning && warnings) {
        std::ostringstream msg;
        msg << "spectral density tail above omega_max=" << omega_max << " ps^-1 holds "
            << 100.0 * discrete.tail_fraction << "% of the kernel weight";
        warnings->push_back(msg.str());
    }
    auto spectrum = modes::diagonalize(bath::build_matrix(discrete, config.omega0_ps_inv));
    return {std::move(discrete), std::move(spectrum)};
}

bool closed_form_applies(const RunConfig& config) {
    return config.density_file.empty() && config.omega0_ps_inv == 0.0;
}

}  // namespace qisf::app::detail
