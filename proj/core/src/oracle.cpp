#include "qisf/oracle.hpp"

#include <cmath>
#include <future>
#include <limits>

#include <Eigen/Dense>

#include "qisf/correlators.hpp"
#include "qisf/errors.hpp"
#include "qisf/units.hpp"

namespace qisf::oracle {

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t partition_key(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64_mix(splitmix64_mix(seed) ^ (index + 0x632BE59BD9B4E019ULL));
}

std::uint64_t CounterRng::next_u64() noexcept {
    ++counter_;
    return splitmix64_mix(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::next_uniform() noexcept {
    // (k + ½)·2⁻⁵³ never hits 0 or 1.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::next_gaussian() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_uniform() - 1.0;
        v = 2.0 * next_uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

namespace {

struct Accumulator {
    std::vector<double> sum;
    std::vector<double> sum_sq;
};

}  // namespace

McEstimate mc_vacf(const modes::NormalModeSpectrum& spectrum, const McConfig& config) {
    if (config.n_samples < 1) throw domain_error("mc_vacf: n_samples must be at least 1");
    if (config.n_partitions < 1 || config.batch_size < 1) throw domain_error("mc_vacf: partitions and batch size must be positive");
    const double kt = units::thermal_energy(config.temperature);
    const double m = spectrum.mass();
    const auto& omegas = spectrum.omegas();
    const auto& d2 = spectrum.weights();
    const auto n_modes = static_cast<Eigen::Index>(omegas.size());

    std::vector<bool> zero_mode(omegas.size());
    for (std::size_t k = 0; k < omegas.size(); ++k) {
        zero_mode[k] = omegas[k] < corr::zero_mode_omega;
        if (zero_mode[k] && spectrum.omega0() > 0.0 && d2[k] > 0.0)
            throw model_error("mc_vacf: zero-frequency normal mode in a confining potential (omega0 > 0)");
    }

    const auto n_t = static_cast<Eigen::Index>(config.grid.size());
    Eigen::MatrixXd cos_table(n_t, n_modes), sin_table(n_t, n_modes);
    for (Eigen::Index j = 0; j < n_t; ++j) {
        const double t = config.grid.time(static_cast<std::size_t>(j));
        for (Eigen::Index k = 0; k < n_modes; ++k) {
            const auto u = static_cast<std::size_t>(k);
            const double d = std::sqrt(d2[u]);
            cos_table(j, k) = d * std::cos(omegas[u] * t);
            sin_table(j, k) = d * std::sin(omegas[u] * t);
        }
    }
    const auto origin = static_cast<Eigen::Index>(config.grid.origin());
    const double momentum_sd = std::sqrt(m * kt);
    const double v2 = kt / m;

    auto run_partition = [&](std::size_t p) {
        const std::size_t begin = config.n_samples * p / config.n_partitions;
        const std::size_t end = config.n_samples * (p + 1) / config.n_partitions;
        CounterRng rng(partition_key(config.seed, p));
        Accumulator acc{std::vector<double>(static_cast<std::size_t>(n_t), 0.0),
                        std::vector<double>(static_cast<std::size_t>(n_t), 0.0)};
        for (std::size_t first = begin; first < end; first += config.batch_size) {
            const auto batch = static_cast<Eigen::Index>(std::min(config.batch_size, end - first));
            Eigen::MatrixXd vel0(n_modes, batch), disp(n_modes, batch);
            for (Eigen::Index b = 0; b < batch; ++b) {
                for (Eigen::Index k = 0; k < n_modes; ++k) {
                    const auto u = static_cast<std::size_t>(k);
                    vel0(k, b) = momentum_sd * rng.next_gaussian() / m;  // q_k(0)/m
                    if (zero_mode[u]) {
                        disp(k, b) = 0.0;
                    } else {
                        const double y0 = std::sqrt(kt / m) / omegas[u] * rng.next_gaussian();
                        disp(k, b) = y0 * omegas[u];  // y_k(0)Ω_k
                    }
                }
            }
            const Eigen::MatrixXd v = cos_table * vel0 - sin_table * disp;
            for (Eigen::Index b = 0; b < batch; ++b) {
                const double v0 = v(origin, b);
                for (Eigen::Index j = 0; j < n_t; ++j) {
                    const double c = v(j, b) * v0 / v2;
                    acc.sum[static_cast<std::size_t>(j)] += c;
                    acc.sum_sq[static_cast<std::size_t>(j)] += c * c;
                }
            }
        }
        return acc;
    };

    std::vector<std::future<Accumulator>> parts;
    for (std::size_t p = 0; p < config.n_partitions; ++p) parts.push_back(std::async(std::launch::async, run_partition, p));

    std::vector<double> sum(static_cast<std::size_t>(n_t), 0.0), sum_sq(sum.size(), 0.0);
    for (auto& f : parts) {
        const auto acc = f.get();
        for (std::size_t j = 0; j < sum.size(); ++j) {
            sum[j] += acc.sum[j];
            sum_sq[j] += acc.sum_sq[j];
        }
    }

    McEstimate out;
    out.times = config.grid.times();
    out.n_samples = config.n_samples;
    out.phi.resize(sum.size());
    out.standard_error.resize(sum.size());
    const auto n = static_cast<double>(config.n_samples);
    for (std::size_t j = 0; j < sum.size(); ++j) {
        const double mean = sum[j] / n;
        out.phi[j] = mean;
        if (config.n_samples < 2) {
            out.standard_error[j] = std::numeric_limits<double>::infinity();
        } else {
            const double var = std::max(0.0, (sum_sq[j] - n * mean * mean) / (n - 1.0));
            out.standard_error[j] = std::sqrt(var / n);
        }
    }
    return out;
}

namespace {

// ∫₀^{i h} f for i = 0..f.size()−1 from samples f[i] = f(i h).
std::vector<double> cumulative_simpson(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    if (n == 2) {
        out[1] = 0.5 * h * (f[0] + f[1]);
        return out;
    }
    out[1] = h * (5.0 * f[0] + 8.0 * f[1] - f[2]) / 12.0;
    for (std::size_t i = 2; i < n; i += 2) out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    for (std::size_t i = 3; i < n; i += 2)
        out[i] = out[i - 3] + 3.0 * h / 8.0 * (f[i - 3] + 3.0 * f[i - 2] + 3.0 * f[i - 1] + f[i]);
    return out;
}

}  // namespace

std::vector<double> quad_recoil(std::span<const double> phi, const TimeGrid& grid, double mass_cmu) {
    if (phi.size() != grid.size()) throw domain_error("quad_recoil: sample count does not match grid");
    if (!(mass_cmu > 0.0)) throw domain_error("quad_recoil: mass must be positive");
    const std::size_t origin = grid.origin();
    const auto pos_count = static_cast<std::size_t>(grid.last_index()) + 1;
    const auto neg_count = static_cast<std::size_t>(-grid.first_index()) + 1;
    std::vector<double> forward(pos_count), backward(neg_count);
    for (std::size_t i = 0; i < pos_count; ++i) forward[i] = phi[origin + i];
    for (std::size_t i = 0; i < neg_count; ++i) backward[i] = phi[origin - i];
    const auto int_pos = cumulative_simpson(forward, grid.step());
    const auto int_neg = cumulative_simpson(backward, grid.step());

    std::vector<double> y(phi.size());
    const std::size_t both = std::min(pos_count, neg_count);
    y[origin] = 0.0;
    for (std::size_t i = 1; i < both; ++i) {
        const double v = 0.5 * (int_pos[i] + int_neg[i]) / mass_cmu;
        y[origin + i] = v;
        y[origin - i] = -v;
    }
    for (std::size_t i = both; i < pos_count; ++i) y[origin + i] = int_pos[i] / mass_cmu;
    for (std::size_t i = both; i < neg_count; ++i) y[origin - i] = -int_neg[i] / mass_cmu;
    return y;
}

}  // namespace qisf::oracle
