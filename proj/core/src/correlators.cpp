#include "qisf/correlators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "qisf/csv.hpp"
#include "qisf/errors.hpp"
#include "qisf/units.hpp"

namespace qisf::corr {

namespace {

// Per-mode factors shared by every mode sum at one temperature.
//   filter_k = (½βħΩ_k) coth(½βħΩ_k)
// so that ħΩ coth(½βħΩ) = 2 k_BT filter and
//   X(t)   = (2k_BT/m) Σ d_k² filter_k (cos Ω_k t − 1)/Ω_k²
//   ψ_Q(t) = (k_BT/m)  Σ d_k² filter_k cos Ω_k t
struct ModeSums {
    const std::vector<double>& omega;
    const std::vector<double>& d2;
    std::vector<double> filter;
    double mass;
    double kt = 0.0;

    ModeSums(const NormalModeSpectrum& s, double temperature_k)
        : omega(s.omegas()), d2(s.weights()), filter(s.size(), 1.0), mass(s.mass()) {
        kt = units::thermal_energy(temperature_k);
        const double beta_hbar = units::hbar / kt;
        for (std::size_t k = 0; k < omega.size(); ++k) {
            const double x = beta_hbar * omega[k];
            filter[k] = x < small_beta_hbar_omega ? 1.0 + x * x / 12.0 : 0.5 * x / std::tanh(0.5 * x);
        }
    }

    // Temperature-free sums (Y, φ).
    explicit ModeSums(const NormalModeSpectrum& s) : omega(s.omegas()), d2(s.weights()), mass(s.mass()) {}

    // (cos Ωt − 1)/Ω², written as −2 sin²(Ωt/2)/Ω² to avoid cancellation.
    static double cosine_deficit(double w, double t) {
        if (w < zero_mode_omega) return -0.5 * t * t;
        const double s = std::sin(0.5 * w * t);
        return -2.0 * s * s / (w * w);
    }

    static double sine_over_omega(double w, double t) { return w < zero_mode_omega ? t : std::sin(w * t) / w; }

    double x(double t) const {
        double sum = 0.0;
        for (std::size_t k = 0; k < omega.size(); ++k) sum += d2[k] * filter[k] * cosine_deficit(omega[k], t);
        return 2.0 * kt / mass * sum;
    }

    double psi_q(double t) const {
        double sum = 0.0;
        for (std::size_t k = 0; k < omega.size(); ++k) sum += d2[k] * filter[k] * std::cos(omega[k] * t);
        return kt / mass * sum;
    }

    double phi(double t) const {
        double sum = 0.0;
        for (std::size_t k = 0; k < omega.size(); ++k) sum += d2[k] * std::cos(omega[k] * t);
        return sum;
    }

    // Odd by construction: evaluated at |t| and signed.
    double y(double t) const {
        const double a = std::abs(t);
        double sum = 0.0;
        for (std::size_t k = 0; k < omega.size(); ++k) sum += d2[k] * sine_over_omega(omega[k], a);
        const double value = sum / mass;
        return t < 0.0 ? -value : value;
    }
};

double simpson_cumulant(const ModeSums& sums, double t, double max_step) {
    const double a = std::abs(t);
    if (a == 0.0) return 0.0;
    if (!(max_step > 0.0)) throw domain_error("x_via_cumulant: step must be positive");
    auto panels = static_cast<std::size_t>(std::ceil(a / max_step));
    if (panels % 2) ++panels;
    const double h = a / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t j = 0; j <= panels; ++j) {
        const double tau = static_cast<double>(j) * h;
        const double w = (j == 0 || j == panels) ? 1.0 : (j % 2 ? 4.0 : 2.0);
        sum += w * (a - tau) * sums.psi_q(tau);
    }
    return -2.0 * sum * h / 3.0;
}

}  // namespace

double x_real_exponent(const NormalModeSpectrum& spectrum, double temperature_k, double t) {
    return ModeSums(spectrum, temperature_k).x(t);
}

double y_recoil(const NormalModeSpectrum& spectrum, double t) { return ModeSums(spectrum).y(t); }

double psi_classical(const NormalModeSpectrum& spectrum, double temperature_k, double t) {
    return units::thermal_energy(temperature_k) / spectrum.mass() * ModeSums(spectrum).phi(t);
}

double psi_quantum(const NormalModeSpectrum& spectrum, double temperature_k, double t) {
    return ModeSums(spectrum, temperature_k).psi_q(t);
}

double quantum_msd(const NormalModeSpectrum& spectrum, double temperature_k, double t) {
    return -x_real_exponent(spectrum, temperature_k, t);
}

double x_via_cumulant(const NormalModeSpectrum& spectrum, double temperature_k, double t, double max_step) {
    return simpson_cumulant(ModeSums(spectrum, temperature_k), t, max_step);
}

std::vector<double> x_via_cumulant(const NormalModeSpectrum& spectrum, double temperature_k, const TimeGrid& grid) {
    const ModeSums sums(spectrum, temperature_k);
    const long reach = std::max(-grid.first_index(), grid.last_index());
    const double h = 0.5 * grid.step();
    const std::size_t fine = 2 * static_cast<std::size_t>(reach);

    // Cumulative Simpson of ψ_Q and τψ_Q on the half-step grid; even fine
    // indices coincide with output grid points.
    std::vector<double> first_moment(static_cast<std::size_t>(reach) + 1, 0.0);
    std::vector<double> zeroth_moment(static_cast<std::size_t>(reach) + 1, 0.0);
    double prev = sums.psi_q(0.0);
    double a = 0.0, b = 0.0;
    for (std::size_t j = 2; j <= fine; j += 2) {
        const double t0 = static_cast<double>(j - 2) * h;
        const double t1 = static_cast<double>(j - 1) * h;
        const double t2 = static_cast<double>(j) * h;
        const double f1 = sums.psi_q(t1);
        const double f2 = sums.psi_q(t2);
        a += h / 3.0 * (prev + 4.0 * f1 + f2);
        b += h / 3.0 * (t0 * prev + 4.0 * t1 * f1 + t2 * f2);
        zeroth_moment[j / 2] = a;
        first_moment[j / 2] = b;
        prev = f2;
    }

    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto idx = static_cast<std::size_t>(std::labs(grid.index_of(i)));
        const double t = static_cast<double>(idx) * grid.step();
        out[i] = -2.0 * (t * zeroth_moment[idx] - first_moment[idx]);
    }
    return out;
}

CorrelatorTable tabulate(const NormalModeSpectrum& spectrum, double temperature_k, const TimeGrid& grid) {
    const ModeSums sums(spectrum, temperature_k);
    CorrelatorTable table;
    table.temperature = temperature_k;
    table.mass = spectrum.mass();
    const std::size_t n = grid.size();
    table.times = grid.times();
    table.phi.resize(n);
    table.psi.resize(n);
    table.psi_q.resize(n);
    table.x.resize(n);
    table.y.resize(n);

    const long reach = std::max(-grid.first_index(), grid.last_index());
    std::vector<double> phi(static_cast<std::size_t>(reach) + 1), psi_q(phi.size()), x(phi.size()), y(phi.size());
    for (long i = 0; i <= reach; ++i) {
        const double t = static_cast<double>(i) * grid.step();
        const auto u = static_cast<std::size_t>(i);
        phi[u] = sums.phi(t);
        psi_q[u] = sums.psi_q(t);
        x[u] = sums.x(t);
        y[u] = sums.y(t);
    }
    const double v2 = sums.kt / sums.mass;
    for (std::size_t i = 0; i < n; ++i) {
        const long idx = grid.index_of(i);
        const auto u = static_cast<std::size_t>(std::labs(idx));
        table.phi[i] = phi[u];
        table.psi[i] = v2 * phi[u];
        table.psi_q[i] = psi_q[u];
        table.x[i] = x[u];
        table.y[i] = idx < 0 ? -y[u] : y[u];
    }
    return table;
}

IsfResult assemble_isf(std::span<const double> times, std::span<const double> x, std::span<const double> y, double dk) {
    if (times.size() != x.size() || times.size() != y.size()) throw domain_error("assemble_isf: length mismatch");
    IsfResult out;
    out.dk = dk;
    out.times.assign(times.begin(), times.end());
    out.isf.resize(times.size());
    out.recoil_factor.resize(times.size());
    const double half_k2 = 0.5 * dk * dk;
    for (std::size_t i = 0; i < times.size(); ++i) {
        out.recoil_factor[i] = std::polar(1.0, half_k2 * units::hbar * y[i]);
        out.isf[i] = std::exp(half_k2 * x[i]) * out.recoil_factor[i];
    }
    return out;
}

IsfResult assemble_isf(const NormalModeSpectrum& spectrum, double temperature_k, double dk, const TimeGrid& grid) {
    const auto table = tabulate(spectrum, temperature_k, grid);
    return assemble_isf(table.times, table.x, table.y, dk);
}

void write_table_csv(std::ostream& out, const CorrelatorTable& table) {
    csv::write_header(out, {"t_ps", "phi", "psi_A2ps2", "psiQ_A2ps2", "X_A2", "Y_A2_per_meVps"});
    for (std::size_t i = 0; i < table.times.size(); ++i)
        csv::write_row(out, {table.times[i], table.phi[i], table.psi[i], table.psi_q[i], table.x[i], table.y[i]});
}

void write_isf_csv(std::ostream& out, const IsfResult& isf) {
    csv::write_header(out, {"t_ps", "re_isf", "im_isf", "re_recoil", "im_recoil"});
    for (std::size_t i = 0; i < isf.times.size(); ++i)
        csv::write_row(out, {isf.times[i], isf.isf[i].real(), isf.isf[i].imag(), isf.recoil_factor[i].real(),
                             isf.recoil_factor[i].imag()});
}

}  // namespace qisf::corr
