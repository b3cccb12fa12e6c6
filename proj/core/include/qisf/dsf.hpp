// dsf.hpp: dynamic structure factor from a sampled ISF
//
// S(ω) = (1/2π) ∫ I(t) e^{−iωt} dt, E = ħω. With this convention
// Σ_k S(ω_k) Δω = I(0), so S is a density per unit angular frequency (ps).

#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "qisf/correlators.hpp"

namespace qisf::dsf {

struct Window {
    enum class Kind { none, gaussian } kind = Kind::none;
    double sigma = 0.0;  // ps; ≤ 0 means t_max/4

    static Window none() { return {}; }
    static Window gaussian(double sigma_ps = 0.0) { return {Kind::gaussian, sigma_ps}; }
};

struct TransformOptions {
    Window window{};
    // Zero-pad to the next power of two ≥ 4× the sample count. Without
    // padding the transform length equals the sample count, which places
    // a grid-commensurate single frequency in exactly one bin.
    bool zero_pad = true;
};

struct DsfResult {
    std::vector<double> energies;  // meV, symmetric about 0
    std::vector<double> s_values;  // ps
    double dk = 0.0;
    Window window{};
    double max_imag_residual = 0.0;  // max |Im S| / max |Re S|
    std::size_t transform_length = 0;

    double energy_step() const { return energies.size() > 1 ? energies[1] - energies[0] : 0.0; }
};

// Requires a uniform time grid symmetric about 0 (domain_error otherwise).
DsfResult isf_to_dsf(const corr::IsfResult& isf, const TransformOptions& options = {});

// max_{E>0} |S(−E) − e^{−E/k_BT} S(E)| / max S over bins with S ≥ 1e-6·max S.
double detailed_balance_residual(const DsfResult& dsf, double temperature_k);

// max |S(E) − S(−E)| / max S.
double symmetry_residual(const DsfResult& dsf);

// Parabolic interpolation through the maximum bin; computation_error when the
// maximum sits on the grid boundary.
double peak_energy(const DsfResult& dsf);

// E_meV,S
void write_dsf_csv(std::ostream& out, const DsfResult& dsf);

}  // namespace qisf::dsf
