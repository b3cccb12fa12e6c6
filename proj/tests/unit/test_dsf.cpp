#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

#include "qisf/bath.hpp"
#include "qisf/dsf.hpp"
#include "qisf/errors.hpp"
#include "qisf/units.hpp"

using namespace qisf;

namespace {

const double m7 = units::mass_cmu(7.0);

corr::IsfResult constant_isf(std::size_t half, double step) {
    corr::IsfResult r;
    r.dk = 1.0;
    for (long i = -static_cast<long>(half); i <= static_cast<long>(half); ++i) {
        r.times.push_back(static_cast<double>(i) * step);
        r.isf.emplace_back(1.0, 0.0);
        r.recoil_factor.emplace_back(1.0, 0.0);
    }
    return r;
}

corr::IsfResult ballistic_isf(double mass_amu) {
    const modes::NormalModeSpectrum free({0.0}, {1.0}, units::mass_cmu(mass_amu));
    return corr::assemble_isf(free, 150.0, 1.0, TimeGrid::from_range(-10.0, 10.0, 4001));
}

corr::IsfResult drude_isf(const TimeGrid& grid) {
    const auto sd = bath::SpectralDensity::drude(1.0, 2.0, m7);
    const auto s = modes::diagonalize(bath::build_matrix(bath::discretize(sd, 2000, 100.0), 0.0));
    return corr::assemble_isf(s, 150.0, 1.0, grid);
}

}  // namespace

TEST(IsfToDsf, ElasticIsDeltaAtZero) {
    const auto dsf = dsf::isf_to_dsf(constant_isf(50, 0.1), {dsf::Window::none(), false});
    const auto peak = std::max_element(dsf.s_values.begin(), dsf.s_values.end());
    const auto centre = dsf.s_values.size() / 2;
    EXPECT_EQ(static_cast<std::size_t>(peak - dsf.s_values.begin()), centre);
    EXPECT_EQ(dsf.energies[centre], 0.0);
    for (std::size_t k = 0; k < dsf.s_values.size(); ++k)
        if (k != centre) EXPECT_NEAR(dsf.s_values[k], 0.0, 1e-12 * dsf.s_values[centre]);
    EXPECT_NEAR(dsf::peak_energy(dsf), 0.0, 1e-12);
}

TEST(IsfToDsf, NormalisationSumsToIsfAtOrigin) {
    const auto dsf = dsf::isf_to_dsf(ballistic_isf(7.0), {dsf::Window::none(), true});
    const double domega = dsf.energy_step() / units::hbar;
    const double total = std::accumulate(dsf.s_values.begin(), dsf.s_values.end(), 0.0) * domega;
    EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(IsfToDsf, EnergyGridSymmetric) {
    const auto dsf = dsf::isf_to_dsf(ballistic_isf(7.0));
    const std::size_t n = dsf.energies.size();
    ASSERT_EQ(n % 2, 1u);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(dsf.energies[k], -dsf.energies[n - 1 - k]);
}

TEST(IsfToDsf, RejectsBadGrids) {
    auto r = constant_isf(5, 0.1);
    r.times[3] += 0.01;
    EXPECT_THROW(dsf::isf_to_dsf(r), domain_error);
    auto even = constant_isf(5, 0.1);
    even.times.pop_back();
    even.isf.pop_back();
    EXPECT_THROW(dsf::isf_to_dsf(even), domain_error);
}

TEST(PeakEnergy, BallisticRecoilShift) {
    for (auto window : {dsf::Window::none(), dsf::Window::gaussian()}) {
        EXPECT_NEAR(dsf::peak_energy(dsf::isf_to_dsf(ballistic_isf(7.0), {window, true})), 0.2986, 3e-3);
        EXPECT_NEAR(dsf::peak_energy(dsf::isf_to_dsf(ballistic_isf(14.0), {window, true})), 0.1493, 3e-3);
    }
}

TEST(PeakEnergy, BoundaryMaximumIsAnError) {
    dsf::DsfResult r;
    r.energies = {-1.0, 0.0, 1.0};
    r.s_values = {3.0, 2.0, 1.0};
    EXPECT_THROW(dsf::peak_energy(r), computation_error);
}

TEST(DetailedBalance, BallisticSignTest) {
    const auto dsf = dsf::isf_to_dsf(ballistic_isf(7.0));
    const auto centre = dsf.s_values.size() / 2;
    const auto offset = static_cast<std::size_t>(std::lround(0.2986 / dsf.energy_step()));
    EXPECT_GT(dsf.s_values[centre + offset], dsf.s_values[centre - offset]);
}

TEST(DetailedBalance, FullQuantumIsf) {
    const auto grid = TimeGrid::from_range(-10.0, 10.0, 4001);
    const auto isf = drude_isf(grid);
    const auto windowed = dsf::isf_to_dsf(isf, {dsf::Window::gaussian(), true});
    EXPECT_LT(dsf::detailed_balance_residual(windowed, 150.0), 5e-3);
    EXPECT_LT(windowed.max_imag_residual, 1e-10);
}

TEST(DetailedBalance, StableUnderGridRefinement) {
    const auto coarse = dsf::isf_to_dsf(drude_isf(TimeGrid::from_range(-10.0, 10.0, 2001)));
    const auto fine = dsf::isf_to_dsf(drude_isf(TimeGrid::from_range(-10.0, 10.0, 4001)));
    EXPECT_NEAR(dsf::detailed_balance_residual(coarse, 150.0), dsf::detailed_balance_residual(fine, 150.0), 5e-3);
    EXPECT_NEAR(dsf::peak_energy(coarse), dsf::peak_energy(fine), 3e-3);
}

TEST(Symmetry, ClassicalIsfIsSymmetric) {
    const auto grid = TimeGrid::from_range(-10.0, 10.0, 4001);
    auto isf = drude_isf(grid);
    for (auto& v : isf.isf) v = std::abs(v);
    const auto dsf = dsf::isf_to_dsf(isf);
    EXPECT_LT(dsf::symmetry_residual(dsf), 1e-10);
    EXPECT_NEAR(dsf::detailed_balance_residual(dsf, 1e12), dsf::symmetry_residual(dsf), 1e-10);
}

TEST(Csv, DsfHeader) {
    std::ostringstream out;
    dsf::write_dsf_csv(out, dsf::isf_to_dsf(constant_isf(2, 0.5), {dsf::Window::none(), false}));
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "E_meV,S");
}
