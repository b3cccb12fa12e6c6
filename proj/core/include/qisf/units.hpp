// units.hpp: internal unit system: ps, Å, meV and the consistent mass unit
//
// One c.m.u. is 1 meV·ps²/Å² ≈ 9.648 amu. All computation happens in these
// units; conversion to/from amu and kelvin happens only at the boundaries.

#pragma once

namespace qisf::units {

namespace codata {
inline constexpr double atomic_mass_kg = 1.66053906660e-27;
inline constexpr double mev_in_joule = 1.602176634e-22;
inline constexpr double hbar_joule_s = 1.054571817e-34;
inline constexpr double boltzmann_joule_per_k = 1.380649e-23;
}  // namespace codata

struct UnitSystem {
    double hbar;        // meV·ps
    double kB;          // meV/K
    double amu_to_cmu;  // dimensionless
};

// 1 meV·ps²/Å² expressed in kg.
inline constexpr double cmu_in_kg = codata::mev_in_joule * 1e-24 / 1e-20;

inline constexpr UnitSystem internal{
    codata::hbar_joule_s / codata::mev_in_joule * 1e12,
    codata::boltzmann_joule_per_k / codata::mev_in_joule,
    codata::atomic_mass_kg / cmu_in_kg,
};

inline constexpr double hbar = internal.hbar;
inline constexpr double kB = internal.kB;
inline constexpr double amu_to_cmu = internal.amu_to_cmu;

double mass_cmu(double mass_amu);

// k_B T in meV.
double thermal_energy(double temperature_k);

// β = 1/(k_B T) in meV⁻¹.
double inverse_temperature(double temperature_k);

// ħ²ΔK²/2m in meV, the ballistic line shift.
double recoil_energy(double mass_cmu, double dk_inv_angstrom);

}  // namespace qisf::units
