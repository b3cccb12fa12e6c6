// oracle.hpp: independent validation engines: Monte Carlo sampling of the
// classical normal-mode dynamics and quadrature of the recoil integral.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qisf/normal_modes.hpp"
#include "qisf/time_grid.hpp"

namespace qisf::oracle {

// Counter-based generator: the n-th draw of stream `key` is
// splitmix64_mix(key + (n + 1)·0x9E3779B97F4A7C15). Gaussians via the
// Marsaglia polar method on uniforms in (−1, 1).
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

    std::uint64_t next_u64() noexcept;
    // Uniform in (0, 1) with 53 random bits.
    double next_uniform() noexcept;
    double next_gaussian() noexcept;

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;
// Stream key of partition `index` for a run seeded with `seed`.
std::uint64_t partition_key(std::uint64_t seed, std::uint64_t index) noexcept;

struct McConfig {
    std::size_t n_samples = 100000;
    std::uint64_t seed = 42;
    double temperature = 150.0;  // K
    TimeGrid grid = TimeGrid(0.05, 0, 200);
    std::size_t n_partitions = 4;
    std::size_t batch_size = 512;
};

struct McEstimate {
    std::vector<double> times;
    std::vector<double> phi;     // ⟨v(t)v(0)⟩/(k_BT/m)
    std::vector<double> standard_error;
    std::size_t n_samples = 0;
};

// y_k(0) ~ N(0, k_BT/(mΩ_k²)), q_k(0) ~ N(0, m k_BT); velocities evolved
// exactly, ẏ_k(t) = (q_k/m) cos Ω_k t − y_k Ω_k sin Ω_k t. Zero modes
// contribute only through q_k. Deterministic for a fixed seed and partition count.
McEstimate mc_vacf(const modes::NormalModeSpectrum& spectrum, const McConfig& config);

// Y(t) = (1/m)∫₀ᵗ φ by cumulative Simpson from t = 0 outward on a grid that
// contains 0, antisymmetrized about the origin.
std::vector<double> quad_recoil(std::span<const double> phi, const TimeGrid& grid, double mass_cmu);

}  // namespace qisf::oracle
