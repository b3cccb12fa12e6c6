// pipeline.hpp: shared construction steps for the commands

#pragma once

#include <string>
#include <vector>

#include "qisf/app/config.hpp"
#include "qisf/bath.hpp"
#include "qisf/normal_modes.hpp"

namespace qisf::app::detail {

double mass_cmu(const RunConfig& config);
bath::SpectralDensity density(const RunConfig& config);
double omega_max(const RunConfig& config, const bath::SpectralDensity& sd);

struct ModeModel {
    bath::DiscretizedBath bath;
    modes::NormalModeSpectrum spectrum;
};

ModeModel build_modes(const RunConfig& config, const bath::SpectralDensity& sd, std::size_t n_modes, double omega_max,
                      std::vector<std::string>* warnings);

// Drude bath with no confining potential: the closed form applies.
bool closed_form_applies(const RunConfig& config);

}  // namespace qisf::app::detail
