#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "qisf/bath.hpp"
#include "qisf/correlators.hpp"
#include "qisf/units.hpp"

using namespace qisf;
using modes::NormalModeSpectrum;

namespace {

const double m7 = units::mass_cmu(7.0);

NormalModeSpectrum drude_spectrum(double wc, std::size_t n = 2000, double omega_max = 100.0) {
    const auto sd = bath::SpectralDensity::drude(1.0, wc, m7);
    return modes::diagonalize(bath::build_matrix(bath::discretize(sd, n, omega_max), 0.0));
}

const NormalModeSpectrum& fig1_spectrum() {
    static const auto s = drude_spectrum(2.0);
    return s;
}

}  // namespace

TEST(XRealExponent, OriginAndFreeParticle) {
    const NormalModeSpectrum free({0.0}, {1.0}, m7);
    EXPECT_EQ(corr::x_real_exponent(free, 150.0, 0.0), 0.0);
    EXPECT_NEAR(corr::x_real_exponent(free, 150.0, 1.0), -17.81671, 1e-5);
    EXPECT_NEAR(corr::quantum_msd(free, 150.0, 1.0), units::thermal_energy(150.0) / m7, 1e-12);
}

TEST(XRealExponent, ClassicalLimitOfSingleMode) {
    const NormalModeSpectrum s({1.0}, {1.0}, 1.0);
    const double t = 1.3;
    const double classical = 2.0 * units::thermal_energy(1e5) * (std::cos(t) - 1.0);
    EXPECT_NEAR(corr::x_real_exponent(s, 1e5, t) / classical, 1.0, 1e-6);
}

TEST(XRealExponent, SingleModeClosedForm) {
    // X = (ħ/mΩ)coth(βħΩ/2)(cos Ωt − 1).
    const double w = 3.0, m = 0.5, temp = 20.0, t = 0.8;
    const NormalModeSpectrum s({w}, {1.0}, m);
    const double x = units::hbar * w / (2.0 * units::thermal_energy(temp));
    const double expected = units::hbar / (m * w) / std::tanh(x) * (std::cos(w * t) - 1.0);
    EXPECT_NEAR(corr::x_real_exponent(s, temp, t), expected, 1e-13 * std::abs(expected));
}

TEST(XRealExponent, NonPositiveAndSymmetric) {
    const auto& s = fig1_spectrum();
    for (double t : {0.01, 0.5, 3.0, 9.5}) {
        const double x = corr::x_real_exponent(s, 150.0, t);
        EXPECT_LE(x, 0.0);
        EXPECT_EQ(x, corr::x_real_exponent(s, 150.0, -t));
    }
}

TEST(YRecoil, Examples) {
    const NormalModeSpectrum free({0.0}, {1.0}, m7);
    EXPECT_EQ(corr::y_recoil(free, 0.0), 0.0);
    EXPECT_NEAR(corr::y_recoil(free, 1.0), 1.3783619, 5e-7);
    // mY(1) = 1 − e⁻¹cos 1 for γ = 1, ω_c = 2.
    EXPECT_NEAR(corr::y_recoil(fig1_spectrum(), 1.0) * m7, 1.0 - std::exp(-1.0) * std::cos(1.0), 2e-3);
}

TEST(YRecoil, UniversalGradient) {
    const double h = 1e-3;
    const NormalModeSpectrum free({0.0}, {1.0}, m7);
    for (const auto* s : {&fig1_spectrum(), &free}) {
        const double slope = (corr::y_recoil(*s, h) - corr::y_recoil(*s, -h)) / (2.0 * h);
        EXPECT_NEAR(slope * m7, 1.0, 1e-4);
    }
}

TEST(PsiQuantum, ScalarExample) {
    const NormalModeSpectrum s({10.0}, {1.0}, 1.0);
    const double half = 0.5 * units::hbar * 10.0;
    EXPECT_NEAR(corr::psi_quantum(s, 10.0, 0.0), half / std::tanh(half / units::thermal_energy(10.0)), 1e-12);
    EXPECT_NEAR(corr::psi_quantum(s, 10.0, 0.0), 3.294232, 1e-6);
}

TEST(PsiQuantum, HighTemperatureLimit) {
    const auto& s = fig1_spectrum();
    for (double t : {0.0, 0.4, 2.0})
        EXPECT_NEAR(corr::psi_quantum(s, 1e7, t) / corr::psi_classical(s, 1e7, t), 1.0, 1e-6);
}

TEST(XViaCumulant, MatchesModeSum) {
    const NormalModeSpectrum single({2.0}, {1.0}, 1.0);
    EXPECT_EQ(corr::x_via_cumulant(single, 100.0, 0.0, 0.01), 0.0);
    const double xs = corr::x_real_exponent(single, 100.0, 1.7);
    EXPECT_NEAR(corr::x_via_cumulant(single, 100.0, 1.7, 0.005), xs, 1e-8 * std::abs(xs));

    const auto& s = fig1_spectrum();
    const double x2 = corr::x_real_exponent(s, 150.0, 2.0);
    EXPECT_NEAR(corr::x_via_cumulant(s, 150.0, 2.0, 0.005), x2, 1e-4 * std::abs(x2));
}

TEST(XViaCumulant, GridRouteEquivalence) {
    const auto grid = TimeGrid::from_range(-10.0, 10.0, 4001);
    const auto& s = fig1_spectrum();
    const auto cumulant = corr::x_via_cumulant(s, 150.0, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); i += 7) {
        const double x = corr::x_real_exponent(s, 150.0, grid.time(i));
        worst = std::max(worst, std::abs(cumulant[i] - x) / std::max(1e-12, std::abs(x)));
    }
    EXPECT_LT(worst, 1e-4);
}

TEST(XViaCumulant, ClassicalCumulantLimit) {
    // −½X → ∫₀ᵗ(t−t′)ψ(t′)dt′ with classical ψ, i.e. Σd²(kT/m)(1 − cos Ωt)/Ω².
    const NormalModeSpectrum s({0.5, 1.5}, {0.4, 0.6}, 1.0);
    const double temp = 1e6, t = 2.0, kt = units::thermal_energy(temp);
    const double classical = -2.0 * kt * (0.4 * (1 - std::cos(0.5 * t)) / 0.25 + 0.6 * (1 - std::cos(1.5 * t)) / 2.25);
    EXPECT_NEAR(corr::x_real_exponent(s, temp, t) / classical, 1.0, 1e-6);
}

TEST(Tabulate, Invariants) {
    const auto grid = TimeGrid::from_range(-10.0, 10.0, 4001);
    const auto table = corr::tabulate(fig1_spectrum(), 150.0, grid);
    const std::size_t o = grid.origin();
    EXPECT_NEAR(table.phi[o], 1.0, 1e-12);
    EXPECT_EQ(table.x[o], 0.0);
    EXPECT_EQ(table.y[o], 0.0);
    for (std::size_t i = 1; i <= o; ++i) {
        EXPECT_EQ(table.y[o + i], -table.y[o - i]);
        EXPECT_EQ(table.x[o + i], table.x[o - i]);
        EXPECT_LE(table.x[o + i], 0.0);
    }
}

TEST(Tabulate, YIsTemperatureIndependent) {
    const auto grid = TimeGrid::from_range(-5.0, 5.0, 201);
    const auto cold = corr::tabulate(fig1_spectrum(), 10.0, grid);
    const auto hot = corr::tabulate(fig1_spectrum(), 1000.0, grid);
    EXPECT_EQ(cold.y, hot.y);
}

TEST(AssembleIsf, OriginAndHermiticity) {
    const auto grid = TimeGrid::from_range(-10.0, 10.0, 801);
    const auto isf = corr::assemble_isf(fig1_spectrum(), 150.0, 1.0, grid);
    const std::size_t o = grid.origin();
    EXPECT_EQ(isf.isf[o], std::complex<double>(1.0, 0.0));
    for (std::size_t i = 1; i <= o; ++i) {
        EXPECT_EQ(isf.isf[o - i], std::conj(isf.isf[o + i]));
        EXPECT_LE(std::abs(isf.isf[o + i]), 1.0);
    }
}

TEST(AssembleIsf, BallisticPhaseIsRecoilEnergy) {
    const NormalModeSpectrum free({0.0}, {1.0}, m7);
    const auto grid = TimeGrid::from_range(-2.0, 2.0, 81);
    const auto isf = corr::assemble_isf(free, 150.0, 1.0, grid);
    const double er = 0.298582806;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid.time(i);
        EXPECT_NEAR(std::arg(isf.recoil_factor[i]), er * t / units::hbar, 1e-8);
    }
}

TEST(AssembleIsf, RecoilFactorExample) {
    const auto grid = TimeGrid::from_range(-1.0, 1.0, 3);
    const auto isf = corr::assemble_isf(fig1_spectrum(), 150.0, 1.0, grid);
    // sin(½ħ·Y(1)) with Y(1) = (1 − e⁻¹cos 1)/m.
    EXPECT_NEAR(isf.recoil_factor[2].imag(), 0.355512, 1e-3);
}

TEST(Csv, TableHeaders) {
    const auto grid = TimeGrid::from_range(-1.0, 1.0, 3);
    std::ostringstream table, isf;
    corr::write_table_csv(table, corr::tabulate(fig1_spectrum(), 150.0, grid));
    corr::write_isf_csv(isf, corr::assemble_isf(fig1_spectrum(), 150.0, 1.0, grid));
    EXPECT_EQ(table.str().substr(0, table.str().find('\n')), "t_ps,phi,psi_A2ps2,psiQ_A2ps2,X_A2,Y_A2_per_meVps");
    EXPECT_EQ(isf.str().substr(0, isf.str().find('\n')), "t_ps,re_isf,im_isf,re_recoil,im_recoil");
}
