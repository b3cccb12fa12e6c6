// closed_form.hpp: exponential memory kernel γ(t) = θ(t) γ ω_c e^{−ω_c t}
// for an unconfined particle (ω₀ = 0).
//
// The VACF is biexponential, φ(t) = p₁e^{s₁|t|} + p₂e^{s₂|t|}, with s₁, s₂
// the roots of s² + ω_c s + γω_c = 0 and p₁ = (s₁+ω_c)/(s₁−s₂),
// p₂ = (s₂+ω_c)/(s₂−s₁). Integrating once gives the recoil function
// sgn(t) m Y(t) = p₁/s₁ e^{s₁|t|} + p₂/s₂ e^{s₂|t|} + 1/γ.

#pragma once

#include <complex>
#include <span>

namespace qisf::closed_form {

using complex = std::complex<double>;

// When the roots coincide (ω_c = 4γ, |s₁ − s₂| < 1e-9|s₁|) the p's diverge
// and the confluent representation φ(t) = (p₁ + p₂|t|) e^{s₁|t|} is stored
// instead: p₁ = 1, p₂ = s₁ + ω_c.
struct LaplaceRoots {
    complex s1;  // smaller magnitude root (Im ≥ 0 when complex)
    complex s2;
    complex p1;
    complex p2;
    bool critical = false;
};

inline constexpr double critical_tolerance = 1e-9;

LaplaceRoots solve_roots(double gamma, double omega_c);

class ExponentialKernelModel {
public:
    ExponentialKernelModel(double gamma, double omega_c, double mass_cmu);

    double gamma() const noexcept { return gamma_; }
    double omega_c() const noexcept { return omega_c_; }
    double mass() const noexcept { return mass_; }
    const LaplaceRoots& roots() const noexcept { return roots_; }
    bool ballistic() const noexcept { return gamma_ == 0.0; }

private:
    double gamma_;
    double omega_c_;
    double mass_;
    LaplaceRoots roots_;
};

// Normalised VACF; real part of the complex biexponential, the imaginary
// residual is checked against 1e-12·(|p₁| + |p₂|).
double vacf_closed(const ExponentialKernelModel& model, double t);

// Y(t) in ps/c.m.u.; falls back to t/m for γ = 0.
double recoil_closed(const ExponentialKernelModel& model, double t);

// γ(t) of the model (t ≥ 0).
double kernel_closed(const ExponentialKernelModel& model, double t);

// ∫₀^∞ φ dt from the biexponential: −(p₁/s₁ + p₂/s₂).
double vacf_integral(const ExponentialKernelModel& model);

// D = k_BT/(mγ) in Å²/ps; cross-checked against k_BT/m · ∫φ to 1e-10.
double diffusion_coefficient(const ExponentialKernelModel& model, double temperature_k);

// Y(t) = t/m.
double ballistic_recoil(double mass_cmu, double t);

// True if the sampled curve has a strict interior local extremum.
bool has_interior_extremum(std::span<const double> samples);

}  // namespace qisf::closed_form
