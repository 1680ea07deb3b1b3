#pragma once

#include "piezonode/transfer_function.hpp"

namespace piezonode {

/// Mass-spring-damper parameters of the harvester structure, SI units.
struct MsdParams {
    double mass_kg = 0.0;
    double damping_Ns_per_m = 0.0;
    double stiffness_N_per_m = 0.0;

    void validate() const;
    double natural_frequency_rad_s() const;
    double damping_ratio() const;
};

/// Force-to-displacement plant: 1 / (M s^2 + D s + K).
TransferFunction msd_plant(const MsdParams& p);

}  // namespace piezonode
