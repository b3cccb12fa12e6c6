#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qisf/bath.hpp"
#include "qisf/closed_form.hpp"
#include "qisf/correlators.hpp"
#include "qisf/errors.hpp"
#include "qisf/oracle.hpp"
#include "qisf/units.hpp"

using namespace qisf;

namespace {

const double m7 = units::mass_cmu(7.0);

}  // namespace

TEST(CounterRng, ReferenceStream) {
    // SplitMix64 with seed 0 starts 0xE220A8397B1DCDAF.
    oracle::CounterRng rng(0);
    EXPECT_EQ(rng.next_u64(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(rng.next_u64(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(rng.counter(), 2u);
}

TEST(CounterRng, GaussianMoments) {
    oracle::CounterRng rng(oracle::partition_key(42, 0));
    const int n = 400000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.next_gaussian();
        sum += g;
        sum_sq += g * g;
    }
    EXPECT_NEAR(sum / n, 0.0, 5.0 / std::sqrt(n));
    EXPECT_NEAR(sum_sq / n, 1.0, 5.0 * std::sqrt(2.0 / n));
}

TEST(CounterRng, UniformOpenInterval) {
    oracle::CounterRng rng(7);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.next_uniform();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(McVacf, SingleMode) {
    const modes::NormalModeSpectrum s({1.0}, {1.0}, m7);
    oracle::McConfig cfg;
    const auto est = oracle::mc_vacf(s, cfg);
    for (std::size_t j = 0; j < est.times.size(); ++j)
        EXPECT_LT(std::abs(est.phi[j] - std::cos(est.times[j])), 3.0 * est.standard_error[j] + 1e-12) << est.times[j];
}

TEST(McVacf, DrudeSpectrumAgainstClosedForm) {
    const auto sd = bath::SpectralDensity::drude(1.0, 2.0, m7);
    const auto s = modes::diagonalize(bath::build_matrix(bath::discretize(sd, 200, 20.0), 0.0));
    oracle::McConfig cfg;
    const auto est = oracle::mc_vacf(s, cfg);
    const closed_form::ExponentialKernelModel model(1.0, 2.0, m7);
    std::size_t within = 0;
    for (std::size_t j = 0; j < est.times.size(); ++j)
        if (std::abs(est.phi[j] - closed_form::vacf_closed(model, est.times[j])) < 4.0 * est.standard_error[j]) ++within;
    EXPECT_GE(static_cast<double>(within) / static_cast<double>(est.times.size()), 0.99);
    const std::size_t at1 = 20;
    ASSERT_DOUBLE_EQ(est.times[at1], 1.0);
    EXPECT_LT(std::abs(est.phi[at1] - 0.508326), 3.0 * est.standard_error[at1]);
    EXPECT_NEAR(est.standard_error[at1], std::sqrt(2.0 / 1e5), 2e-3);
}

TEST(McVacf, DeterministicForSeedAndPartitions) {
    const modes::NormalModeSpectrum s({0.5, 2.0}, {0.3, 0.7}, 1.0);
    oracle::McConfig cfg;
    cfg.n_samples = 1;
    const auto a = oracle::mc_vacf(s, cfg);
    const auto b = oracle::mc_vacf(s, cfg);
    EXPECT_EQ(a.phi, b.phi);
    cfg.n_samples = 5000;
    EXPECT_EQ(oracle::mc_vacf(s, cfg).phi, oracle::mc_vacf(s, cfg).phi);
    cfg.seed = 43;
    EXPECT_NE(oracle::mc_vacf(s, cfg).phi, a.phi);
}

TEST(McVacf, ZeroModeInWellIsModelError) {
    const modes::NormalModeSpectrum s({0.0, 1.0}, {0.5, 0.5}, 1.0, 0.5);
    EXPECT_THROW(oracle::mc_vacf(s, {}), model_error);
}

TEST(McVacf, FreeParticleVelocityIsConstant) {
    const modes::NormalModeSpectrum s({0.0}, {1.0}, m7);
    oracle::McConfig cfg;
    cfg.n_samples = 20000;
    const auto est = oracle::mc_vacf(s, cfg);
    for (std::size_t j = 1; j < est.phi.size(); ++j) EXPECT_NEAR(est.phi[j], est.phi[0], 1e-12);
}

TEST(QuadRecoil, ConstantVacfIsBallistic) {
    const auto grid = TimeGrid::from_range(-2.0, 2.0, 401);
    const std::vector<double> ones(grid.size(), 1.0);
    const auto y = oracle::quad_recoil(ones, grid, m7);
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(y[i], grid.time(i) / m7, 1e-13);
}

TEST(QuadRecoil, ClosedFormVacf) {
    const auto grid = TimeGrid::from_range(-10.0, 10.0, 4001);
    const closed_form::ExponentialKernelModel model(1.0, 2.0, m7);
    std::vector<double> phi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) phi[i] = closed_form::vacf_closed(model, grid.time(i));
    const auto y = oracle::quad_recoil(phi, grid, m7);
    EXPECT_NEAR(y[grid.origin() + 200], 1.104390, 1e-5);
    for (std::size_t i = 1; i <= grid.origin(); ++i) EXPECT_EQ(y[grid.origin() - i], -y[grid.origin() + i]);
    EXPECT_EQ(y[grid.origin()], 0.0);
}

TEST(QuadRecoil, MatchesModeSum) {
    const auto grid = TimeGrid::from_range(-10.0, 10.0, 4001);
    const auto sd = bath::SpectralDensity::drude(1.0, 2.0, m7);
    const auto s = modes::diagonalize(bath::build_matrix(bath::discretize(sd, 2000, 100.0), 0.0));
    const auto table = corr::tabulate(s, 150.0, grid);
    const auto y = oracle::quad_recoil(table.phi, grid, m7);
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(y[i], table.y[i], 1e-5);
}

TEST(QuadRecoil, RejectsMismatch) {
    const auto grid = TimeGrid::from_range(-1.0, 1.0, 5);
    EXPECT_THROW(oracle::quad_recoil(std::vector<double>(4, 1.0), grid, m7), domain_error);
}
