#include <gtest/gtest.h>

#include "qisf/errors.hpp"
#include "qisf/units.hpp"

namespace u = qisf::units;

TEST(Units, ConstantsMatchCodataToSixFigures) {
    EXPECT_NEAR(u::hbar, 0.658212, 5e-7);
    EXPECT_NEAR(u::kB, 0.0861733, 5e-8);
    EXPECT_NEAR(u::amu_to_cmu, 0.103643, 5e-7);
}

TEST(Units, AmuToCmuIsKilogramRatio) {
    // 1 meV·ps²/Å² = 1.602176634e-22 J · 1e-24 s² / 1e-20 m².
    EXPECT_NEAR(u::amu_to_cmu, 1.66053906660e-27 / 1.602176634e-26, 1e-15);
}

TEST(Units, MassConversion) {
    EXPECT_NEAR(u::mass_cmu(7.0), 0.725499, 5e-7);
    EXPECT_NEAR(u::mass_cmu(1.0), 0.103643, 5e-7);
    EXPECT_THROW(u::mass_cmu(0.0), qisf::domain_error);
    EXPECT_THROW(u::mass_cmu(-1.0), qisf::domain_error);
}

TEST(Units, MassRoundTrip) {
    for (double x : {0.5, 1.0, 4.0, 7.0, 200.59}) EXPECT_DOUBLE_EQ(u::mass_cmu(x) / u::amu_to_cmu, x);
}

TEST(Units, ThermalEnergy) {
    EXPECT_NEAR(u::thermal_energy(300.0), 25.8520, 5e-5);
    EXPECT_NEAR(u::thermal_energy(150.0), 12.9260, 5e-5);
    EXPECT_THROW(u::thermal_energy(0.0), qisf::domain_error);
    EXPECT_THROW(u::inverse_temperature(-5.0), qisf::domain_error);
    EXPECT_NEAR(u::inverse_temperature(150.0) * u::thermal_energy(150.0), 1.0, 1e-15);
}

TEST(Units, RecoilEnergy) {
    EXPECT_NEAR(u::recoil_energy(u::mass_cmu(7.0), 1.0), 0.298582806, 1e-9);
    EXPECT_NEAR(u::recoil_energy(u::mass_cmu(14.0), 1.0), 0.149291403, 1e-9);
}
