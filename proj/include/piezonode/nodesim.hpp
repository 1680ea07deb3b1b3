#pragma once

#include <optional>
#include <string>
#include <vector>

#include "piezonode/energy.hpp"
#include "piezonode/msd.hpp"
#include "piezonode/pid.hpp"

namespace piezonode {

enum class McuMode { On, Off };

/// Sinusoidal base vibration driving the harvester. frequency_rad_s = 0
/// means "resonant": the plant's natural frequency is used.
struct Excitation {
    double amplitude_m = 0.0325;
    double frequency_rad_s = 0.0;
};

struct HarvestConfig {
    double electrical_damping_Ns_per_m = 0.2;  // c_e; its reaction force -c_e*zdot acts on the plant
    Excitation excitation;
    std::optional<PidGains> controller;  // absent = passive harvesting
    double dt_s = 1e-3;
    double capacity_J = 0.5;

    // On-mode activity cadence: one full cycle_energy drain spread over this window.
    double activity_window_s = 0.3;
    double tx_distance_m = 50.0;

    // Commanded oscillation amplitude is setpoint_gain_m times the
    // normalized energy error, floored so recharge stays finite.
    double setpoint_gain_m = 0.25;
    double setpoint_floor = 0.25;

    void validate() const;
};

struct NodeState {
    double residual_energy_J = 0.0;
    McuMode mode = McuMode::On;
    double plant_position_m = 0.0;
    double plant_velocity_m_s = 0.0;
    double time_s = 0.0;
    long cycle_count = 0;  // completed On->Off transitions

    // Flows booked by the step that produced this state.
    double step_harvested_J = 0.0;
    double step_consumed_J = 0.0;

    // Controller memory, reset on each Off-phase entry.
    double ctrl_integral = 0.0;
    double ctrl_prev_error = 0.0;
    bool ctrl_primed = false;

    // Off->On switch cost is paid by the first On step, keeping consumption
    // out of Off-mode records.
    double pending_switch_J = 0.0;

    // Cumulative diagnostics.
    double excitation_work_J = 0.0;
    double control_work_J = 0.0;
};

struct NodeSample {
    double t_s;
    McuMode mode;  // mode in effect during the step
    double residual_J;
    double harvested_J;
    double consumed_J;
    double z_m;
};

struct NodeTrace {
    double dt_s = 0.0;
    std::vector<NodeSample> samples;

    /// CSV with header `t,mode,residual_J,harvested_J,consumed_J,z_m`.
    std::string to_csv() const;
};

/// Instantaneous extraction through the electrical damping: c_e * zdot^2.
/// Only meaningful while harvesting (Off mode).
double harvest_power(const NodeState& s, const HarvestConfig& cfg);

NodeState initial_state(const EnergyParams& p, const HarvestConfig& cfg);

/// One dt of the battery-managed duty cycle. On mode drains the activity
/// cycle pro rata and switches Off below the threshold energy; Off mode
/// advances the excited plant (PID-regulated when a controller is set),
/// banks the harvested energy, and switches On at the reference energy.
/// The residual update is exactly E_r(t) = E_h(t) + E_r(t-1) - E_c(t).
NodeState step_node(const NodeState& s, const MsdParams& plant, const EnergyParams& p, const HarvestConfig& cfg);

struct RunResult {
    NodeTrace trace;
    NodeState final_state;
};

/// Deterministic full run; refuses livelocked configurations where one
/// activity cycle costs more than reference - threshold.
RunResult run_sim(const MsdParams& plant, const EnergyParams& p, const HarvestConfig& cfg, double t_end_s);

struct CycleStats {
    bool periodic = false;
    double period_s = 0.0;
    double duty_fraction = 0.0;
    int cycles = 0;  // complete On->Off->On cycles
};

/// Periodicity check over the On->Off transition times; needs at least
/// three transitions (throws InsufficientCyclesError otherwise). Cycles
/// count as periodic when consecutive durations agree within 5%.
CycleStats detect_cycle(const NodeTrace& trace);

}  // namespace piezonode
