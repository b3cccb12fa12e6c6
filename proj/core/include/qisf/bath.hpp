// bath.hpp: bath coupling: spectral density, friction kernel, discretization
// into explicit oscillators and the coupled-oscillator potential matrix.
//
// Conventions (all bath masses equal to the system mass m):
//   J(ω)   = (π/2) Σ_α c_α²/(m_α ω_α) δ(ω − ω_α), stored as J(ω)/m
//   γ(t)   = θ(t) (1/m) Σ_α c_α²/(m_α ω_α²) cos(ω_α t)
//          = (2/π) ∫₀^∞ J(ω)/(m ω) cos(ω t) dω                         [ps⁻¹]
//   Drude: J(ω)/m = γ ω ω_c²/(ω² + ω_c²)  ⇔  γ(t) = γ ω_c e^{−ω_c t}

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace qisf::bath {

struct Drude {
    double gamma;    // ps⁻¹, zero-frequency friction ∫γ(t)dt
    double omega_c;  // ps⁻¹, memory decay rate
};

struct Tabulated {
    std::vector<double> omega;     // ps⁻¹, strictly increasing, > 0
    std::vector<double> j_over_m;  // J(ω)/m in ps⁻², ≥ 0
};

class SpectralDensity {
public:
    static SpectralDensity drude(double gamma, double omega_c, double mass_cmu);
    static SpectralDensity tabulated(Tabulated table, double mass_cmu);

    // Two columns (ω in ps⁻¹, J/m in ps⁻²); '#' starts a comment.
    static SpectralDensity read_table(std::istream& in, double mass_cmu);
    static SpectralDensity read_table(const std::filesystem::path& path, double mass_cmu);

    bool is_drude() const noexcept { return std::holds_alternative<Drude>(form_); }
    const Drude& as_drude() const;
    const Tabulated& as_tabulated() const;
    double mass() const noexcept { return mass_; }

    // J(ω)/m; tabulated form interpolates linearly, rises linearly from J(0) = 0
    // below the first point and is zero above the last.
    double j_over_mass(double omega) const;
    double j(double omega) const { return mass_ * j_over_mass(omega); }

    // Fraction of ∫₀^∞ J/(mω) dω lying above omega_max.
    double tail_fraction(double omega_max) const;

private:
    SpectralDensity(std::variant<Drude, Tabulated> form, double mass) : form_(std::move(form)), mass_(mass) {}

    std::variant<Drude, Tabulated> form_;
    double mass_;
};

// γ(t) = γ ω_c e^{−ω_c t} for the Drude form.
double kernel_analytic(const SpectralDensity& sd, double t);

// γ(t) from the cosine transform of J/(mω): Fourier quadrature for Drude,
// trapezoid over the table for tabulated densities.
double kernel_from_density(const SpectralDensity& sd, double t);

struct DiscretizedBath {
    std::vector<double> omegas;          // ω_α, ps⁻¹
    std::vector<double> kernel_weights;  // κ_α = c_α²/(m m_α ω_α²), ps⁻²
    double omega_max = 0.0;
    double mass = 0.0;  // system mass, c.m.u.
    double tail_fraction = 0.0;
    bool truncation_warning = false;  // tail_fraction > 1%

    std::size_t n_modes() const noexcept { return omegas.size(); }
    // Σ_α κ_α cos(ω_α t), the discrete reconstruction of γ(t).
    double kernel(double t) const;
};

inline constexpr double truncation_warning_threshold = 0.01;

// Midpoint rule ω_α = (α − ½)Δω, Δω = omega_max/n_modes,
// κ_α = (2/π) [J(ω_α)/m] Δω / ω_α.
DiscretizedBath discretize(const SpectralDensity& sd, std::size_t n_modes, double omega_max);

// 50·max(ω_c, γ, ω₀) for Drude, the table's last frequency otherwise.
double default_omega_max(const SpectralDensity& sd, double omega0);
inline constexpr std::size_t default_n_modes = 2000;

// V/m for H = p·p/2m + ½ xᵀVx, index 0 = system coordinate, units ps⁻².
struct CoupledPotentialMatrix {
    Eigen::MatrixXd entries;
    double omega0 = 0.0;
    double mass = 0.0;

    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

// (0,0) = ω₀² + Σκ_α (counter-term), (α,α) = ω_α², (0,α) = −c_α/m = −ω_α√κ_α.
CoupledPotentialMatrix build_matrix(const DiscretizedBath& bath, double omega0);

}  // namespace qisf::bath
