#include "piezonode/nodesim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "piezonode/errors.hpp"
#include "piezonode/format.hpp"

namespace piezonode {

namespace {

template <std::size_t N, class Deriv>
void rk4_step(Deriv&& deriv, double t, double dt, double (&s)[N]) {
    double k1[N], k2[N], k3[N], k4[N], tmp[N];
    deriv(t, s, k1);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = s[i] + 0.5 * dt * k1[i];
    deriv(t + 0.5 * dt, tmp, k2);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = s[i] + 0.5 * dt * k2[i];
    deriv(t + 0.5 * dt, tmp, k3);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = s[i] + dt * k3[i];
    deriv(t + dt, tmp, k4);
    for (std::size_t i = 0; i < N; ++i) s[i] += (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

double resolve_frequency(const HarvestConfig& cfg, const MsdParams& plant) {
    return cfg.excitation.frequency_rad_s > 0.0 ? cfg.excitation.frequency_rad_s
                                                : plant.natural_frequency_rad_s();
}

}  // namespace

void HarvestConfig::validate() const {
    if (!(electrical_damping_Ns_per_m > 0.0)) throw std::invalid_argument("electrical damping must be positive");
    if (excitation.amplitude_m < 0.0) throw std::invalid_argument("excitation amplitude must be non-negative");
    if (excitation.frequency_rad_s < 0.0) throw std::invalid_argument("excitation frequency must be non-negative");
    if (!(dt_s > 0.0)) throw std::invalid_argument("simulation dt must be positive");
    if (!(capacity_J > 0.0)) throw std::invalid_argument("battery capacity must be positive");
    if (!(activity_window_s > 0.0)) throw std::invalid_argument("activity window must be positive");
    if (tx_distance_m < 0.0) throw std::invalid_argument("link distance must be non-negative");
    if (setpoint_gain_m < 0.0) throw std::invalid_argument("setpoint gain must be non-negative");
    if (!(setpoint_floor >= 0.0 && setpoint_floor <= 1.0))
        throw std::invalid_argument("setpoint floor must lie in [0, 1]");
    if (controller) controller->validate();
}

std::string NodeTrace::to_csv() const {
    std::ostringstream out;
    out << "t,mode,residual_J,harvested_J,consumed_J,z_m\n";
    for (const auto& s : samples)
        out << fmt_full(s.t_s) << ',' << (s.mode == McuMode::On ? "on" : "off") << ',' << fmt_full(s.residual_J)
            << ',' << fmt_full(s.harvested_J) << ',' << fmt_full(s.consumed_J) << ',' << fmt_full(s.z_m) << '\n';
    return out.str();
}

double harvest_power(const NodeState& s, const HarvestConfig& cfg) {
    if (s.mode != McuMode::Off) throw std::invalid_argument("harvest power is defined in Off (harvesting) mode");
    return cfg.electrical_damping_Ns_per_m * s.plant_velocity_m_s * s.plant_velocity_m_s;
}

NodeState initial_state(const EnergyParams& p, const HarvestConfig& cfg) {
    NodeState s;
    s.residual_energy_J = std::min(p.initial_energy_J, cfg.capacity_J);
    s.mode = McuMode::On;
    return s;
}

NodeState step_node(const NodeState& s, const MsdParams& plant, const EnergyParams& p, const HarvestConfig& cfg) {
    const double dt = cfg.dt_s;
    const double m = plant.mass_kg;
    const double d = plant.damping_Ns_per_m;
    const double k = plant.stiffness_N_per_m;
    const double omega = resolve_frequency(cfg, plant);
    const double force_amp = m * cfg.excitation.amplitude_m * omega * omega;  // f = -M * ybase''

    NodeState next = s;
    next.time_s = s.time_s + dt;

    double harvested = 0.0;
    double consumed = 0.0;

    if (s.mode == McuMode::On) {
        // Harvester disengaged: the plant coasts under the excitation alone.
        double y[3] = {s.plant_position_m, s.plant_velocity_m_s, 0.0};
        rk4_step(
            [&](double t, const double* st, double* ds) {
                const double f = force_amp * std::sin(omega * t);
                ds[0] = st[1];
                ds[1] = (f - d * st[1] - k * st[0]) / m;
                ds[2] = f * st[1];
            },
            s.time_s, dt, y);
        next.plant_position_m = y[0];
        next.plant_velocity_m_s = y[1];
        next.excitation_work_J += y[2];

        consumed = cycle_energy(p, cfg.tx_distance_m).total_J * (dt / cfg.activity_window_s) + s.pending_switch_J;
        next.pending_switch_J = 0.0;

        if (s.residual_energy_J - consumed < p.threshold_energy_J) {
            consumed += e_mcu_switch(p);
            next.mode = McuMode::Off;
            next.cycle_count = s.cycle_count + 1;
            next.ctrl_integral = 0.0;
            next.ctrl_prev_error = 0.0;
            next.ctrl_primed = false;
        }
    } else {
        double u = 0.0;
        if (cfg.controller) {
            // Displacement setpoint: an oscillation whose amplitude tracks
            // the normalized energy error, so the harvesting effort tapers
            // as the battery fills.
            const double err_norm = std::clamp(
                energy_error(p.reference_energy_J, s.residual_energy_J) / p.reference_energy_J,
                cfg.setpoint_floor, 1.0);
            const double z_ref = cfg.setpoint_gain_m * err_norm * std::sin(omega * s.time_s);
            const double e = z_ref - s.plant_position_m;
            next.ctrl_integral = s.ctrl_integral + e * dt;
            const double de = s.ctrl_primed ? (e - s.ctrl_prev_error) / dt : 0.0;
            u = cfg.controller->kp * e + cfg.controller->ki * next.ctrl_integral + cfg.controller->kd * de;
            next.ctrl_prev_error = e;
            next.ctrl_primed = true;
        }

        const double c_e = cfg.electrical_damping_Ns_per_m;
        double y[5] = {s.plant_position_m, s.plant_velocity_m_s, 0.0, 0.0, 0.0};
        rk4_step(
            [&](double t, const double* st, double* ds) {
                const double f = force_amp * std::sin(omega * t);
                ds[0] = st[1];
                ds[1] = (f + u - (d + c_e) * st[1] - k * st[0]) / m;
                ds[2] = c_e * st[1] * st[1];  // extracted power
                ds[3] = f * st[1];
                ds[4] = u * st[1];
            },
            s.time_s, dt, y);
        next.plant_position_m = y[0];
        next.plant_velocity_m_s = y[1];
        next.excitation_work_J += y[3];
        next.control_work_J += y[4];

        harvested = std::min(y[2], cfg.capacity_J - s.residual_energy_J);
    }

    // The recurrence, verbatim; clamping adjusts the booked flow so the
    // ledger stays exact.
    double residual = (s.residual_energy_J + harvested) - consumed;
    if (residual < 0.0) {
        consumed = s.residual_energy_J + harvested;
        residual = 0.0;
    }
    if (residual > cfg.capacity_J) residual = cfg.capacity_J;
    next.residual_energy_J = residual;
    next.step_harvested_J = harvested;
    next.step_consumed_J = consumed;

    if (s.mode == McuMode::Off && residual >= p.reference_energy_J) {
        next.mode = McuMode::On;
        next.pending_switch_J = e_mcu_switch(p);
    }
    return next;
}

RunResult run_sim(const MsdParams& plant, const EnergyParams& p, const HarvestConfig& cfg, double t_end_s) {
    plant.validate();
    p.validate();
    cfg.validate();
    if (t_end_s < 0.0) throw std::invalid_argument("t_end must be non-negative");
    if (cfg.capacity_J < p.reference_energy_J)
        throw std::invalid_argument("battery capacity is below the reference energy");

    const double usable = p.reference_energy_J - p.threshold_energy_J;
    const double cycle_cost = cycle_energy(p, cfg.tx_distance_m).total_J;
    if (cycle_cost > usable) {
        throw LivelockError("one activity cycle costs " + fmt_sig(cycle_cost, 6) + " J but only " +
                            fmt_sig(usable, 6) +
                            " J lie between the reference and threshold energies; the node would bounce "
                            "between modes without finishing a cycle. Reduce the activity cost (alpha, "
                            "packet size, distance) or widen the threshold band.");
    }

    NodeState state = initial_state(p, cfg);
    const auto steps = static_cast<std::size_t>(std::llround(t_end_s / cfg.dt_s));

    RunResult result;
    result.trace.dt_s = cfg.dt_s;
    result.trace.samples.reserve(steps + 1);
    result.trace.samples.push_back({0.0, state.mode, state.residual_energy_J, 0.0, 0.0, state.plant_position_m});

    for (std::size_t i = 1; i <= steps; ++i) {
        const McuMode mode_during = state.mode;
        state = step_node(state, plant, p, cfg);
        result.trace.samples.push_back({state.time_s, mode_during, state.residual_energy_J,
                                        state.step_harvested_J, state.step_consumed_J, state.plant_position_m});
    }
    result.final_state = state;
    return result;
}

CycleStats detect_cycle(const NodeTrace& trace) {
    const auto& s = trace.samples;
    std::vector<std::size_t> off_starts;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1].mode == McuMode::On && s[i].mode == McuMode::Off) off_starts.push_back(i);

    if (off_starts.size() < 3)
        throw InsufficientCyclesError("cycle detection needs at least 3 On->Off transitions, found " +
                                      std::to_string(off_starts.size()));

    std::vector<double> durations;
    for (std::size_t k = 0; k + 1 < off_starts.size(); ++k)
        durations.push_back(s[off_starts[k + 1]].t_s - s[off_starts[k]].t_s);

    bool periodic = true;
    for (std::size_t k = 0; k + 1 < durations.size(); ++k)
        if (std::abs(durations[k + 1] / durations[k] - 1.0) > 0.05) periodic = false;

    double total = 0.0;
    for (double d : durations) total += d;

    double on_time = 0.0;
    for (std::size_t i = off_starts.front() + 1; i <= off_starts.back(); ++i)
        if (s[i].mode == McuMode::On) on_time += trace.dt_s;

    CycleStats stats;
    stats.periodic = periodic;
    stats.cycles = static_cast<int>(durations.size());
    stats.period_s = total / static_cast<double>(durations.size());
    stats.duty_fraction = on_time / total;
    return stats;
}

}  // namespace piezonode
