#include "piezonode/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace piezonode {

void EnergyParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) throw std::invalid_argument(std::string("energy parameter must be positive: ") + name);
    };
    positive(vdc_V, "vdc_V");
    positive(i_sens_A, "i_sens_A");
    positive(t_sens_s_per_bit, "t_sens_s_per_bit");
    positive(i_write_A, "i_write_A");
    positive(t_write_s, "t_write_s");
    positive(i_read_A, "i_read_A");
    positive(t_read_s, "t_read_s");
    positive(i_active_A, "i_active_A");
    positive(t_active_s, "t_active_s");
    positive(i_sleep_A, "i_sleep_A");
    positive(t_sleep_s, "t_sleep_s");
    positive(e_elec_J_per_bit, "e_elec_J_per_bit");
    positive(e_fs_J_per_bit_m2, "e_fs_J_per_bit_m2");
    positive(e_mp_J_per_bit_m4, "e_mp_J_per_bit_m4");
    positive(packet_bits, "packet_bits");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0, 1]");
    if (e_aggregation_J < 0.0) throw std::invalid_argument("aggregation energy must be non-negative");
    if (initial_energy_J < 0.0) throw std::invalid_argument("initial energy must be non-negative");
    if (!(threshold_energy_J < reference_energy_J))
        throw std::invalid_argument("threshold energy must be below the reference energy");
}

double e_sense(const EnergyParams& p) {
    return p.alpha * p.packet_bits * p.vdc_V * p.i_sens_A * p.t_sens_s_per_bit;
}

double e_process(const EnergyParams& p) {
    return (p.alpha * p.packet_bits * p.vdc_V / 8.0) * (p.i_write_A * p.t_write_s + p.i_read_A * p.t_read_s);
}

double threshold_distance(const EnergyParams& p) {
    if (!(p.e_fs_J_per_bit_m2 > 0.0 && p.e_mp_J_per_bit_m4 > 0.0))
        throw std::invalid_argument("amplifier constants must be positive");
    return std::sqrt(p.e_fs_J_per_bit_m2 / p.e_mp_J_per_bit_m4);
}

double e_transmit(const EnergyParams& p, double distance_m) {
    if (distance_m < 0.0) throw std::invalid_argument("distance must be non-negative");
    const double bits = p.alpha * p.packet_bits;
    const double d2 = distance_m * distance_m;
    const double amplifier = distance_m < threshold_distance(p) ? p.e_fs_J_per_bit_m2 * d2
                                                                : p.e_mp_J_per_bit_m4 * d2 * d2;
    return bits * p.e_elec_J_per_bit + bits * amplifier;
}

double e_receive(const EnergyParams& p) { return p.alpha * p.packet_bits * p.e_elec_J_per_bit; }

double e_mcu_switch(const EnergyParams& p) {
    return p.vdc_V * (p.i_active_A * p.t_active_s + p.i_sleep_A * p.t_sleep_s);
}

EnergyBreakdown cycle_energy(const EnergyParams& p, double distance_m) {
    EnergyBreakdown b;
    b.sense_J = e_sense(p);
    b.process_J = e_process(p);
    b.transmit_J = e_transmit(p, distance_m);
    b.receive_J = e_receive(p);
    b.mcu_switch_J = e_mcu_switch(p);
    b.total_J = b.sense_J + b.process_J + b.transmit_J + b.receive_J + b.mcu_switch_J;
    return b;
}

double energy_error(double reference_J, double residual_J) {
    if (reference_J < 0.0 || residual_J < 0.0) throw std::invalid_argument("energies must be non-negative");
    return reference_J - residual_J;
}

double storage_capacitance_F(double full_energy_J, double vdc_V) {
    if (!(full_energy_J > 0.0 && vdc_V > 0.0)) throw std::invalid_argument("capacitance needs positive energy and voltage");
    return 2.0 * full_energy_J / (vdc_V * vdc_V);
}

double storage_voltage_V(double energy_J, double capacitance_F) {
    if (energy_J < 0.0 || !(capacitance_F > 0.0)) throw std::invalid_argument("invalid stored energy or capacitance");
    return std::sqrt(2.0 * energy_J / capacitance_F);
}

}  // namespace piezonode
