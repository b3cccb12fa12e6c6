#include "qisf/units.hpp"

#include <cmath>
#include <string>

#include "qisf/errors.hpp"

namespace qisf::units {

double mass_cmu(double mass_amu) {
    if (!(mass_amu > 0.0)) throw domain_error("mass must be positive, got " + std::to_string(mass_amu) + " amu");
    return mass_amu * amu_to_cmu;
}

double thermal_energy(double temperature_k) {
    if (!(temperature_k > 0.0))
        throw domain_error("temperature must be positive, got " + std::to_string(temperature_k) + " K");
    return kB * temperature_k;
}

double inverse_temperature(double temperature_k) { return 1.0 / thermal_energy(temperature_k); }

double recoil_energy(double mass_cmu, double dk_inv_angstrom) {
    if (!(mass_cmu > 0.0)) throw domain_error("mass must be positive");
    return hbar * hbar * dk_inv_angstrom * dk_inv_angstrom / (2.0 * mass_cmu);
}

}  // namespace qisf::units
