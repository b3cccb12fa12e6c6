#include "qisf/bath.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include "qisf/errors.hpp"

namespace qisf::bath {

namespace {

constexpr double two_over_pi = 2.0 / std::numbers::pi;

void check_mass(double mass) {
    if (!(mass > 0.0)) throw domain_error("system mass must be positive");
}

// Trapezoid of J/(mω) over the table from `from` upward.
double table_integral_above(const Tabulated& tab, double from) {
    double total = 0.0;
    const auto& w = tab.omega;
    const auto& j = tab.j_over_m;
    // J/(mω) is constant on [0, ω₁] because J rises linearly from J(0) = 0.
    if (from < w[0]) total += (w[0] - from) * j[0] / w[0];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        double a = w[i], b = w[i + 1];
        double fa = j[i] / a, fb = j[i + 1] / b;
        if (b <= from) continue;
        if (a < from) {
            const double u = (from - a) / (b - a);
            fa = (j[i] + u * (j[i + 1] - j[i])) / from;
            a = from;
        }
        total += 0.5 * (b - a) * (fa + fb);
    }
    return total;
}

}  // namespace

SpectralDensity SpectralDensity::drude(double gamma, double omega_c, double mass_cmu) {
    check_mass(mass_cmu);
    if (!(gamma >= 0.0)) throw domain_error("Drude gamma must be non-negative");
    if (!(omega_c > 0.0)) throw domain_error("Drude omega_c must be positive");
    return SpectralDensity(Drude{gamma, omega_c}, mass_cmu);
}

SpectralDensity SpectralDensity::tabulated(Tabulated table, double mass_cmu) {
    check_mass(mass_cmu);
    if (table.omega.empty()) throw domain_error("tabulated spectral density is empty");
    if (table.omega.size() != table.j_over_m.size())
        throw domain_error("tabulated spectral density: column lengths differ");
    for (std::size_t i = 0; i < table.omega.size(); ++i) {
        if (!(table.omega[i] > 0.0)) throw domain_error("tabulated frequencies must be positive");
        if (!(table.j_over_m[i] >= 0.0)) throw domain_error("tabulated J(omega) must be non-negative");
        if (i > 0 && !(table.omega[i] > table.omega[i - 1]))
            throw domain_error("tabulated frequencies must be strictly increasing");
    }
    return SpectralDensity(std::move(table), mass_cmu);
}

SpectralDensity SpectralDensity::read_table(std::istream& in, double mass_cmu) {
    Tabulated table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        double w = 0.0, j = 0.0;
        if (!(fields >> w)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw domain_error("spectral density table line " + std::to_string(line_no) + ": expected two numbers");
        }
        if (!(fields >> j)) throw domain_error("spectral density table line " + std::to_string(line_no) + ": missing J column");
        std::string rest;
        if (fields >> rest) throw domain_error("spectral density table line " + std::to_string(line_no) + ": extra columns");
        table.omega.push_back(w);
        table.j_over_m.push_back(j);
    }
    return tabulated(std::move(table), mass_cmu);
}

SpectralDensity SpectralDensity::read_table(const std::filesystem::path& path, double mass_cmu) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open spectral density table " + path.string());
    return read_table(in, mass_cmu);
}

const Drude& SpectralDensity::as_drude() const {
    if (const auto* d = std::get_if<Drude>(&form_)) return *d;
    throw domain_error("spectral density is not of Drude form");
}

const Tabulated& SpectralDensity::as_tabulated() const {
    if (const auto* t = std::get_if<Tabulated>(&form_)) return *t;
    throw domain_error("spectral density is not tabulated");
}

double SpectralDensity::j_over_mass(double omega) const {
    if (!(omega > 0.0)) return 0.0;
    if (const auto* d = std::get_if<Drude>(&form_)) {
        const double wc2 = d->omega_c * d->omega_c;
        return d->gamma * omega * wc2 / (omega * omega + wc2);
    }
    const auto& tab = std::get<Tabulated>(form_);
    const auto& w = tab.omega;
    if (omega > w.back()) return 0.0;
    if (omega < w.front()) return tab.j_over_m.front() * omega / w.front();
    const auto hi = static_cast<std::size_t>(std::lower_bound(w.begin(), w.end(), omega) - w.begin());
    if (w[hi] == omega) return tab.j_over_m[hi];
    const std::size_t lo = hi - 1;
    const double u = (omega - w[lo]) / (w[hi] - w[lo]);
    return tab.j_over_m[lo] + u * (tab.j_over_m[hi] - tab.j_over_m[lo]);
}

double SpectralDensity::tail_fraction(double omega_max) const {
    if (const auto* d = std::get_if<Drude>(&form_)) {
        if (d->gamma == 0.0) return 0.0;
        return 1.0 - two_over_pi * std::atan(omega_max / d->omega_c);
    }
    const auto& tab = std::get<Tabulated>(form_);
    const double total = table_integral_above(tab, 0.0);
    if (total == 0.0) return 0.0;
    return table_integral_above(tab, omega_max) / total;
}

double kernel_analytic(const SpectralDensity& sd, double t) {
    if (t < 0.0) throw domain_error("kernel_analytic: t must be non-negative (theta(t) is the caller's convention)");
    const auto& d = sd.as_drude();
    return d.gamma * d.omega_c * std::exp(-d.omega_c * t);
}

double kernel_from_density(const SpectralDensity& sd, double t) {
    if (t < 0.0) throw domain_error("kernel_from_density: t must be non-negative");
    if (sd.is_drude()) {
        const auto& d = sd.as_drude();
        if (d.gamma == 0.0) return 0.0;
        auto integrand = [&](double w) { return sd.j_over_mass(w) / w; };
        if (t == 0.0) {
            boost::math::quadrature::exp_sinh<double> integrator;
            return two_over_pi * integrator.integrate(integrand, 0.0, std::numeric_limits<double>::infinity());
        }
        boost::math::quadrature::ooura_fourier_cos<double> integrator;
        return two_over_pi * integrator.integrate(integrand, t).first;
    }
    const auto& tab = sd.as_tabulated();
    const double w0 = tab.omega.front();
    double total = tab.j_over_m.front() / w0 * (t == 0.0 ? w0 : std::sin(w0 * t) / t);
    for (std::size_t i = 0; i + 1 < tab.omega.size(); ++i) {
        const double a = tab.omega[i], b = tab.omega[i + 1];
        const double fa = tab.j_over_m[i] / a * std::cos(a * t);
        const double fb = tab.j_over_m[i + 1] / b * std::cos(b * t);
        total += 0.5 * (b - a) * (fa + fb);
    }
    return two_over_pi * total;
}

double DiscretizedBath::kernel(double t) const {
    double sum = 0.0;
    for (std::size_t a = 0; a < omegas.size(); ++a) sum += kernel_weights[a] * std::cos(omegas[a] * t);
    return sum;
}

DiscretizedBath discretize(const SpectralDensity& sd, std::size_t n_modes, double omega_max) {
    if (n_modes < 1) throw domain_error("discretize: n_modes must be at least 1");
    if (!(omega_max > 0.0)) throw domain_error("discretize: omega_max must be positive");
    DiscretizedBath out;
    out.omega_max = omega_max;
    out.mass = sd.mass();
    out.omegas.resize(n_modes);
    out.kernel_weights.resize(n_modes);
    const double dw = omega_max / static_cast<double>(n_modes);
    for (std::size_t a = 0; a < n_modes; ++a) {
        const double w = (static_cast<double>(a) + 0.5) * dw;
        out.omegas[a] = w;
        out.kernel_weights[a] = two_over_pi * sd.j_over_mass(w) * dw / w;
    }
    out.tail_fraction = sd.tail_fraction(omega_max);
    out.truncation_warning = out.tail_fraction > truncation_warning_threshold;
    return out;
}

double default_omega_max(const SpectralDensity& sd, double omega0) {
    if (sd.is_drude()) {
        const auto& d = sd.as_drude();
        return 50.0 * std::max({d.omega_c, d.gamma, omega0});
    }
    return std::max(sd.as_tabulated().omega.back(), 50.0 * omega0);
}

CoupledPotentialMatrix build_matrix(const DiscretizedBath& bath, double omega0) {
    if (!(omega0 >= 0.0)) throw domain_error("build_matrix: omega0 must be non-negative");
    const auto n = static_cast<Eigen::Index>(bath.n_modes());
    CoupledPotentialMatrix v;
    v.omega0 = omega0;
    v.mass = bath.mass;
    v.entries = Eigen::MatrixXd::Zero(n + 1, n + 1);
    double counter_term = 0.0;
    for (Eigen::Index a = 0; a < n; ++a) {
        const double w = bath.omegas[static_cast<std::size_t>(a)];
        const double kappa = bath.kernel_weights[static_cast<std::size_t>(a)];
        counter_term += kappa;
        v.entries(a + 1, a + 1) = w * w;
        const double coupling = -w * std::sqrt(kappa);
        v.entries(0, a + 1) = coupling;
        v.entries(a + 1, 0) = coupling;
    }
    v.entries(0, 0) = omega0 * omega0 + counter_term;
    return v;
}

}  // namespace qisf::bath
