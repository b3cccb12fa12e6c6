#include "qisf/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qisf/errors.hpp"
#include "qisf/units.hpp"

namespace qisf::closed_form {

LaplaceRoots solve_roots(double gamma, double omega_c) {
    if (!(omega_c > 0.0)) throw domain_error("solve_roots: omega_c must be positive");
    if (!(gamma >= 0.0)) throw domain_error("solve_roots: gamma must be non-negative");

    // Larger-magnitude root first, the other from the product s₁s₂ = γω_c.
    const double discriminant = omega_c * (omega_c - 4.0 * gamma);
    const complex root = std::sqrt(complex(discriminant, 0.0));
    const complex q = -0.5 * (omega_c + root);

    LaplaceRoots r;
    r.s2 = q;
    r.s1 = gamma * omega_c / q;
    if (std::abs(r.s1 - r.s2) < critical_tolerance * std::abs(r.s1)) {
        const complex s = -0.5 * omega_c;
        r.s1 = s;
        r.s2 = s;
        r.p1 = 1.0;
        r.p2 = s + omega_c;
        r.critical = true;
        return r;
    }
    r.p1 = (r.s1 + omega_c) / (r.s1 - r.s2);
    r.p2 = (r.s2 + omega_c) / (r.s2 - r.s1);
    return r;
}

ExponentialKernelModel::ExponentialKernelModel(double gamma, double omega_c, double mass_cmu)
    : gamma_(gamma), omega_c_(omega_c), mass_(mass_cmu), roots_(solve_roots(gamma, omega_c)) {
    if (!(mass_cmu > 0.0)) throw domain_error("exponential kernel model: mass must be positive");
}

namespace {

double real_part_checked(complex z, double scale, const char* what) {
    if (std::abs(z.imag()) > 1e-12 * std::max(scale, 1.0)) {
        std::ostringstream msg;
        msg << what << ": imaginary residual " << z.imag() << " did not cancel";
        throw computation_error(msg.str());
    }
    return z.real();
}

}  // namespace

double vacf_closed(const ExponentialKernelModel& model, double t) {
    const auto& r = model.roots();
    const double a = std::abs(t);
    if (r.critical) return ((r.p1 + r.p2 * a) * std::exp(r.s1 * a)).real();
    const complex z = r.p1 * std::exp(r.s1 * a) + r.p2 * std::exp(r.s2 * a);
    return real_part_checked(z, std::abs(r.p1) + std::abs(r.p2), "vacf_closed");
}

double recoil_closed(const ExponentialKernelModel& model, double t) {
    if (model.ballistic()) return ballistic_recoil(model.mass(), t);
    const auto& r = model.roots();
    const double a = std::abs(t);
    double m_y;
    if (r.critical) {
        // ∫₀ᵃ (1 − s τ) e^{sτ} dτ with s = −ω_c/2.
        const double s = r.s1.real();
        const double e = std::exp(s * a);
        m_y = 2.0 * std::expm1(s * a) / s - a * e;
    } else {
        const complex z = r.p1 / r.s1 * std::exp(r.s1 * a) + r.p2 / r.s2 * std::exp(r.s2 * a);
        m_y = real_part_checked(z, std::abs(r.p1 / r.s1) + std::abs(r.p2 / r.s2), "recoil_closed") +
              1.0 / model.gamma();
    }
    const double y = m_y / model.mass();
    return t < 0.0 ? -y : y;
}

double kernel_closed(const ExponentialKernelModel& model, double t) {
    if (t < 0.0) throw domain_error("kernel_closed: t must be non-negative");
    return model.gamma() * model.omega_c() * std::exp(-model.omega_c() * t);
}

double vacf_integral(const ExponentialKernelModel& model) {
    if (model.ballistic()) throw domain_error("vacf_integral: VACF of ballistic motion is not integrable");
    const auto& r = model.roots();
    if (r.critical) return -2.0 / r.s1.real();
    const complex z = -(r.p1 / r.s1 + r.p2 / r.s2);
    return real_part_checked(z, std::abs(r.p1 / r.s1) + std::abs(r.p2 / r.s2), "vacf_integral");
}

double diffusion_coefficient(const ExponentialKernelModel& model, double temperature_k) {
    if (model.ballistic()) throw domain_error("diffusion_coefficient: diverges for gamma = 0 (ballistic motion)");
    const double v2 = units::thermal_energy(temperature_k) / model.mass();
    const double from_plateau = v2 / model.gamma();
    const double from_kubo = v2 * vacf_integral(model);
    if (std::abs(from_plateau - from_kubo) > 1e-10 * from_plateau) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "diffusion_coefficient: k_BT*Y(inf) = " << from_plateau << " but integral of psi = " << from_kubo;
        throw computation_error(msg.str());
    }
    return from_plateau;
}

double ballistic_recoil(double mass_cmu, double t) {
    if (!(mass_cmu > 0.0)) throw domain_error("ballistic_recoil: mass must be positive");
    return t / mass_cmu;
}

bool has_interior_extremum(std::span<const double> samples) {
    if (samples.size() < 3) return false;
    double scale = 0.0;
    for (double v : samples) scale = std::max(scale, std::abs(v));
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    int last_sign = 0;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double d = samples[i] - samples[i - 1];
        if (std::abs(d) <= floor) continue;
        const int sign = d > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) return true;
        last_sign = sign;
    }
    return false;
}

}  // namespace qisf::closed_form
