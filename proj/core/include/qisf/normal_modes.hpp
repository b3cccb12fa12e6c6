// normal_modes.hpp: normal-mode spectrum {d_k², Ω_k} of the global Hamiltonian

#pragma once

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <vector>

#include "qisf/bath.hpp"

namespace qisf::modes {

enum class EigenMethod { automatic, jacobi, arrowhead };

// x = Σ_k d_k y_k; only the system row of the orthogonal transform is kept.
class NormalModeSpectrum {
public:
    // Validates Σd² = 1 (1e-10), d² ≥ 0, Ω ≥ 0 and sorts by Ω.
    NormalModeSpectrum(std::vector<double> omegas, std::vector<double> weights, double mass, double omega0 = 0.0);

    const std::vector<double>& omegas() const noexcept { return omegas_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    double mass() const noexcept { return mass_; }
    double omega0() const noexcept { return omega0_; }
    std::size_t size() const noexcept { return omegas_.size(); }
    double weight_sum() const;

    // Diagnostics filled in by diagonalize().
    EigenMethod method = EigenMethod::automatic;
    double min_eigenvalue = 0.0;
    double orthogonality_error = 0.0;  // only measured on the Jacobi path
    int sweeps = 0;

private:
    std::vector<double> omegas_;
    std::vector<double> weights_;
    double mass_;
    double omega0_;
};

inline constexpr double negative_eigenvalue_tolerance = 1e-9;  // relative to ‖V‖_F
inline constexpr double orthogonality_tolerance = 1e-9;

// Ω_k = √max(λ_k, 0), d_k² = (system component of eigenvector k)².
// λ_k < −1e-9·‖V‖ raises model_error.
NormalModeSpectrum diagonalize(const bath::CoupledPotentialMatrix& v, EigenMethod method = EigenMethod::automatic);

// φ(t) = Σ_k d_k² cos(Ω_k t).
double classical_vacf_modes(const NormalModeSpectrum& spectrum, double t);

// omega_k_ps_inv,dk_sq
void write_spectrum_csv(std::ostream& out, const NormalModeSpectrum& spectrum);

}  // namespace qisf::modes
