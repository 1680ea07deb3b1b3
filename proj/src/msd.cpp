#include "piezonode/msd.hpp"

#include <cmath>
#include <stdexcept>

namespace piezonode {

void MsdParams::validate() const {
    if (!(mass_kg > 0.0)) throw std::invalid_argument("MSD mass must be positive");
    if (!(damping_Ns_per_m > 0.0)) throw std::invalid_argument("MSD damping must be positive");
    if (!(stiffness_N_per_m > 0.0)) throw std::invalid_argument("MSD stiffness must be positive");
}

double MsdParams::natural_frequency_rad_s() const { return std::sqrt(stiffness_N_per_m / mass_kg); }

double MsdParams::damping_ratio() const {
    return damping_Ns_per_m / (2.0 * std::sqrt(mass_kg * stiffness_N_per_m));
}

TransferFunction msd_plant(const MsdParams& p) {
    p.validate();
    return TransferFunction(Polynomial{1.0}, Polynomial{p.mass_kg, p.damping_Ns_per_m, p.stiffness_N_per_m});
}

}  // namespace piezonode
