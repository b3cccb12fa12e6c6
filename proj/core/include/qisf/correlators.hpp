// correlators.hpp: time-domain functions of the system coordinate, summed
// over the normal-mode spectrum.
//
//   φ(t)   = Σ d_k² cos(Ω_k t)
//   ψ(t)   = (k_BT/m) φ(t)                                        Å²/ps²
//   ψ_Q(t) = (k_BT/m) Σ d_k² (½βħΩ_k) coth(½βħΩ_k) cos(Ω_k t)      Å²/ps²
//   X(t)   = Σ d_k²/(mΩ_k) [cos(Ω_k t) − 1] ħ coth(½βħΩ_k)          Å²
//   Y(t)   = Σ d_k² sin(Ω_k t)/(mΩ_k) = (1/m)∫₀ᵗ φ               ps/c.m.u.
//   I(ΔK,t) = exp(½ΔK² X(t)) · exp(½ iħΔK² Y(t))

#pragma once

#include <complex>
#include <ostream>
#include <span>
#include <vector>

#include "qisf/normal_modes.hpp"
#include "qisf/time_grid.hpp"

namespace qisf::corr {

using modes::NormalModeSpectrum;

// Below these thresholds the series branches are used: βħΩ for coth, Ω (ps⁻¹) for sin(Ωt)/Ω.
inline constexpr double small_beta_hbar_omega = 1e-6;
inline constexpr double zero_mode_omega = 1e-8;

double x_real_exponent(const NormalModeSpectrum& spectrum, double temperature_k, double t);
double y_recoil(const NormalModeSpectrum& spectrum, double t);
double psi_classical(const NormalModeSpectrum& spectrum, double temperature_k, double t);
double psi_quantum(const NormalModeSpectrum& spectrum, double temperature_k, double t);
// ⟨[x(t) − x(0)]²⟩ symmetrized, = −X(t).
double quantum_msd(const NormalModeSpectrum& spectrum, double temperature_k, double t);

// −½X(t) = ∫₀ᵗ (t − t′) ψ_Q(t′) dt′ by composite Simpson with panels of at most max_step.
double x_via_cumulant(const NormalModeSpectrum& spectrum, double temperature_k, double t, double max_step);
// Same, evaluated on every grid point from one cumulative pass at half the grid step.
std::vector<double> x_via_cumulant(const NormalModeSpectrum& spectrum, double temperature_k, const TimeGrid& grid);

struct CorrelatorTable {
    std::vector<double> times;  // ps
    std::vector<double> phi;
    std::vector<double> psi;    // Å²/ps²
    std::vector<double> psi_q;  // Å²/ps²
    std::vector<double> x;      // Å²
    std::vector<double> y;      // ps/c.m.u. = Å²/(meV·ps)
    double temperature = 0.0;   // K
    double mass = 0.0;          // c.m.u.
};

// Functions are evaluated at |t| and mirrored, so Y(−t) = −Y(t) exactly.
CorrelatorTable tabulate(const NormalModeSpectrum& spectrum, double temperature_k, const TimeGrid& grid);

struct IsfResult {
    double dk = 0.0;  // Å⁻¹
    std::vector<double> times;
    std::vector<std::complex<double>> isf;
    std::vector<std::complex<double>> recoil_factor;  // exp(½ iħΔK² Y)
};

IsfResult assemble_isf(const NormalModeSpectrum& spectrum, double temperature_k, double dk, const TimeGrid& grid);

// Assemble from already tabulated X and Y (either route).
IsfResult assemble_isf(std::span<const double> times, std::span<const double> x, std::span<const double> y, double dk);

// t_ps,phi,psi_A2ps2,psiQ_A2ps2,X_A2,Y_A2_per_meVps
void write_table_csv(std::ostream& out, const CorrelatorTable& table);
// t_ps,re_isf,im_isf,re_recoil,im_recoil
void write_isf_csv(std::ostream& out, const IsfResult& isf);

}  // namespace qisf::corr
