#include "piezonode/scenario.hpp"

#include <stdexcept>

namespace piezonode {

void Scenario::validate() const {
    energy.validate();
    plant.validate();
    harvest.validate();
    if (tuning.ultimate) tuning.ultimate->validate();
    tuning.search.validate();
    if (!(energy.reference_energy_J <= harvest.capacity_J))
        throw std::invalid_argument("reference energy exceeds the battery capacity");
    if (sim.dt_s && !(*sim.dt_s > 0.0)) throw std::invalid_argument("sim dt must be positive");
    if (sim.t_end_s && *sim.t_end_s < 0.0) throw std::invalid_argument("sim t_end must be non-negative");
}

namespace {

Scenario mica2_base() {
    Scenario s;
    s.name = "mica2";

    EnergyParams& e = s.energy;
    e.vdc_V = 2.7;
    e.reference_energy_J = 0.2;
    e.threshold_energy_J = 0.1;
    e.t_sens_s_per_bit = 0.5e-3;
    e.i_sens_A = 25e-3;
    e.i_write_A = 18.4e-3;
    e.t_write_s = 12.9e-3;
    e.i_read_A = 6.2e-3;
    e.t_read_s = 565e-6;
    e.i_active_A = 8e-3;
    e.t_active_s = 1e-3;
    e.i_sleep_A = 1e-6;
    e.t_sleep_s = 299e-3;
    e.e_elec_J_per_bit = 50e-9;
    e.e_fs_J_per_bit_m2 = 10e-12;
    e.e_mp_J_per_bit_m4 = 0.0013e-12;
    e.e_aggregation_J = 5e-12;
    e.packet_bits = 4000.0;
    e.alpha = 0.2;
    e.initial_energy_J = 0.5 * e.alpha;

    s.plant = MsdParams{0.182, 0.2, 1.2320};

    HarvestConfig& h = s.harvest;
    h.electrical_damping_Ns_per_m = 0.2;
    h.excitation.amplitude_m = 0.0325;
    h.excitation.frequency_rad_s = s.plant.natural_frequency_rad_s();
    h.controller = PidGains{20.2366, 10.3729, 9.8699};
    h.dt_s = 1e-3;
    h.capacity_J = 0.5;
    h.activity_window_s = e.t_active_s + e.t_sleep_s;
    h.tx_distance_m = 50.0;
    h.setpoint_gain_m = 0.25;
    h.setpoint_floor = 0.25;

    s.tuning.ultimate = UltimateParams{33.727, 3.90176};
    return s;
}

}  // namespace

Scenario preset(const std::string& name) {
    if (name == "mica2") return mica2_base();
    if (name == "mica2-full") {
        Scenario s = mica2_base();
        s.name = "mica2-full";
        s.energy.alpha = 1.0;
        s.energy.initial_energy_J = 0.5;
        return s;
    }
    throw std::invalid_argument("unknown preset '" + name + "'; available: mica2, mica2-full");
}

std::vector<std::string> preset_names() { return {"mica2", "mica2-full"}; }

}  // namespace piezonode
