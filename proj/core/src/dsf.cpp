#include "qisf/dsf.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include <fftw3.h>

#include "qisf/csv.hpp"
#include "qisf/errors.hpp"
#include "qisf/units.hpp"

namespace qisf::dsf {

namespace {

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

struct FftwPlan {
    fftw_plan plan;
    ~FftwPlan() { fftw_destroy_plan(plan); }
};

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void check_symmetric_uniform(const std::vector<double>& t) {
    const std::size_t n = t.size();
    if (n < 3 || n % 2 == 0) throw domain_error("isf_to_dsf: need an odd number (>= 3) of samples centred on t = 0");
    const std::size_t c = n / 2;
    if (t[c] != 0.0) throw domain_error("isf_to_dsf: time grid is not centred on t = 0");
    const double step = t[1] - t[0];
    if (!(step > 0.0)) throw domain_error("isf_to_dsf: times must be increasing");
    const double t_max = std::abs(t.back());
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs((t[i] - t[i - 1]) - step) > 1e-9 * step) throw domain_error("isf_to_dsf: time grid is not uniform");
    for (std::size_t i = 0; i < c; ++i)
        if (std::abs(t[i] + t[n - 1 - i]) > 1e-12 * t_max) throw domain_error("isf_to_dsf: time grid is not symmetric");
}

}  // namespace

DsfResult isf_to_dsf(const corr::IsfResult& isf, const TransformOptions& options) {
    check_symmetric_uniform(isf.times);
    const std::size_t n = isf.times.size();
    const std::size_t c = n / 2;
    const double dt = isf.times[1] - isf.times[0];
    const double t_max = isf.times.back();

    Window window = options.window;
    if (window.kind == Window::Kind::gaussian && !(window.sigma > 0.0)) window.sigma = 0.25 * t_max;

    const std::size_t m = options.zero_pad ? next_power_of_two(4 * n) : n;
    FftwBuffer in(fftw_alloc_complex(m));
    FftwBuffer out(fftw_alloc_complex(m));
    if (!in || !out) throw computation_error("isf_to_dsf: FFT buffer allocation failed");
    std::fill_n(&in[0][0], 2 * m, 0.0);
    FftwPlan plan{fftw_plan_dft_1d(static_cast<int>(m), in.get(), out.get(), FFTW_FORWARD, FFTW_ESTIMATE)};

    // Sample t_j = (j − c)Δt goes to slot (j − c) mod m so the transform is
    // Σ_j I(t_j) e^{−iω_k t_j} with ω_k = 2πk/(mΔt).
    for (std::size_t j = 0; j < n; ++j) {
        double w = 1.0;
        if (window.kind == Window::Kind::gaussian) {
            const double u = isf.times[j] / window.sigma;
            w = std::exp(-0.5 * u * u);
        }
        const std::size_t slot = j >= c ? j - c : m - (c - j);
        in[slot][0] = w * isf.isf[j].real();
        in[slot][1] = w * isf.isf[j].imag();
    }
    fftw_execute(plan.plan);

    const long half = m % 2 ? static_cast<long>((m - 1) / 2) : static_cast<long>(m / 2) - 1;
    const double d_omega = 2.0 * std::numbers::pi / (static_cast<double>(m) * dt);
    const double norm = dt / (2.0 * std::numbers::pi);

    DsfResult result;
    result.dk = isf.dk;
    result.window = window;
    result.transform_length = m;
    result.energies.reserve(static_cast<std::size_t>(2 * half + 1));
    result.s_values.reserve(static_cast<std::size_t>(2 * half + 1));
    double max_re = 0.0, max_im = 0.0;
    for (long k = -half; k <= half; ++k) {
        const std::size_t slot = k >= 0 ? static_cast<std::size_t>(k) : m - static_cast<std::size_t>(-k);
        const double re = norm * out[slot][0];
        const double im = norm * out[slot][1];
        result.energies.push_back(units::hbar * d_omega * static_cast<double>(k));
        result.s_values.push_back(re);
        max_re = std::max(max_re, std::abs(re));
        max_im = std::max(max_im, std::abs(im));
    }
    result.max_imag_residual = max_re > 0.0 ? max_im / max_re : 0.0;
    return result;
}

double detailed_balance_residual(const DsfResult& dsf, double temperature_k) {
    const double kt = units::thermal_energy(temperature_k);
    const auto& s = dsf.s_values;
    const std::size_t n = s.size();
    const std::size_t c = n / 2;
    const double peak = *std::max_element(s.begin(), s.end());
    if (!(peak > 0.0)) throw computation_error("detailed_balance_residual: spectrum has no positive weight");
    const double floor = 1e-6 * peak;
    double worst = 0.0;
    for (std::size_t k = 1; k <= c; ++k) {
        const double gain = s[c + k];  // S(E), E > 0
        const double loss = s[c - k];  // S(−E)
        if (std::max(gain, loss) < floor) continue;
        const double e = dsf.energies[c + k];
        worst = std::max(worst, std::abs(loss - std::exp(-e / kt) * gain));
    }
    return worst / peak;
}

double symmetry_residual(const DsfResult& dsf) {
    const auto& s = dsf.s_values;
    const std::size_t n = s.size();
    double peak = 0.0, worst = 0.0;
    for (double v : s) peak = std::max(peak, std::abs(v));
    for (std::size_t k = 0; k < n / 2; ++k) worst = std::max(worst, std::abs(s[k] - s[n - 1 - k]));
    return peak > 0.0 ? worst / peak : 0.0;
}

double peak_energy(const DsfResult& dsf) {
    const auto& s = dsf.s_values;
    if (s.size() < 3) throw domain_error("peak_energy: need at least three energy bins");
    const auto i = static_cast<std::size_t>(std::max_element(s.begin(), s.end()) - s.begin());
    if (i == 0 || i + 1 == s.size()) throw computation_error("peak_energy: maximum lies on the energy-grid boundary");
    const double y0 = s[i - 1], y1 = s[i], y2 = s[i + 1];
    const double curvature = y0 - 2.0 * y1 + y2;
    const double offset = curvature != 0.0 ? 0.5 * (y0 - y2) / curvature : 0.0;
    return dsf.energies[i] + offset * (dsf.energies[i + 1] - dsf.energies[i]);
}

void write_dsf_csv(std::ostream& out, const DsfResult& dsf) {
    csv::write_header(out, {"E_meV", "S"});
    for (std::size_t k = 0; k < dsf.energies.size(); ++k) csv::write_row(out, {dsf.energies[k], dsf.s_values[k]});
}

}  // namespace qisf::dsf
