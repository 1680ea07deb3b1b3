#pragma once

namespace piezonode {

/// Per-activity consumption constants of a Mica2-class node. Everything is
/// SI here; scenario parsing converts from the mA/ms/us/nJ/pJ units the
/// config files use.
struct EnergyParams {
    double vdc_V = 0.0;
    double i_sens_A = 0.0;
    double t_sens_s_per_bit = 0.0;
    double i_write_A = 0.0;
    double t_write_s = 0.0;
    double i_read_A = 0.0;
    double t_read_s = 0.0;
    double i_active_A = 0.0;
    double t_active_s = 0.0;
    double i_sleep_A = 0.0;
    double t_sleep_s = 0.0;
    double e_elec_J_per_bit = 0.0;
    double e_fs_J_per_bit_m2 = 0.0;
    double e_mp_J_per_bit_m4 = 0.0;
    double e_aggregation_J = 0.0;  // carried for completeness; no consumption term uses it
    double packet_bits = 0.0;      // N
    double alpha = 1.0;            // compression fraction, (0, 1]
    double reference_energy_J = 0.0;
    double threshold_energy_J = 0.0;
    double initial_energy_J = 0.0;

    void validate() const;
};

struct EnergyBreakdown {
    double sense_J = 0.0;
    double process_J = 0.0;
    double transmit_J = 0.0;
    double receive_J = 0.0;
    double mcu_switch_J = 0.0;
    double total_J = 0.0;
};

/// alpha * N * Vdc * I_sens * T_sens
double e_sense(const EnergyParams& p);

/// (alpha * N * Vdc / 8) * (I_write * T_write + I_read * T_read)
double e_process(const EnergyParams& p);

/// Crossover distance sqrt(E_fs / E_mp) between the d^2 and d^4 amplifier models.
double threshold_distance(const EnergyParams& p);

/// First-order radio model: electronics term plus the free-space d^2
/// amplifier below the threshold distance, multipath d^4 at and above it
/// (the two branches agree at the boundary).
double e_transmit(const EnergyParams& p, double distance_m);

/// alpha * N * E_elec
double e_receive(const EnergyParams& p);

/// Vdc * (I_active * T_active + I_sleep * T_sleep), one active+sleep pair.
double e_mcu_switch(const EnergyParams& p);

/// All activity components of one packet treatment at the given link distance.
EnergyBreakdown cycle_energy(const EnergyParams& p, double distance_m);

/// Reference energy minus residual energy.
double energy_error(double reference_J, double residual_J);

/// Equivalent storage capacitance that makes the energy-error and
/// voltage-error views of the battery agree: C = 2 E_full / Vdc^2.
double storage_capacitance_F(double full_energy_J, double vdc_V);

/// Terminal voltage of the equivalent capacitor at the given stored energy.
double storage_voltage_V(double energy_J, double capacitance_F);

}  // namespace piezonode
