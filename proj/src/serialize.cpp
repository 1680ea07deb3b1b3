#include "piezonode/serialize.hpp"

#include <algorithm>

#include "piezonode/errors.hpp"

namespace piezonode {

using nlohmann::json;

json energy_params_to_json(const EnergyParams& p) {
    return json{
        {"vdc_V", p.vdc_V},
        {"reference_energy_J", p.reference_energy_J},
        {"threshold_energy_J", p.threshold_energy_J},
        {"t_sens_ms_per_bit", p.t_sens_s_per_bit / 1e-3},
        {"i_sens_mA", p.i_sens_A / 1e-3},
        {"i_write_mA", p.i_write_A / 1e-3},
        {"t_write_ms", p.t_write_s / 1e-3},
        {"i_read_mA", p.i_read_A / 1e-3},
        {"t_read_us", p.t_read_s / 1e-6},
        {"i_active_mA", p.i_active_A / 1e-3},
        {"t_active_ms", p.t_active_s / 1e-3},
        {"i_sleep_uA", p.i_sleep_A / 1e-6},
        {"t_sleep_ms", p.t_sleep_s / 1e-3},
        {"e_elec_nJ_per_bit", p.e_elec_J_per_bit / 1e-9},
        {"e_fs_pJ_per_bit_m2", p.e_fs_J_per_bit_m2 / 1e-12},
        {"e_mp_pJ_per_bit_m4", p.e_mp_J_per_bit_m4 / 1e-12},
        {"e_aggregation_J", p.e_aggregation_J},
        {"packet_bits", p.packet_bits},
        {"alpha", p.alpha},
        {"initial_energy_J", p.initial_energy_J},
    };
}

EnergyParams energy_params_from_json(const json& j) {
    EnergyParams p;
    p.vdc_V = j.at("vdc_V").get<double>();
    p.reference_energy_J = j.at("reference_energy_J").get<double>();
    p.threshold_energy_J = j.at("threshold_energy_J").get<double>();
    p.t_sens_s_per_bit = j.at("t_sens_ms_per_bit").get<double>() * 1e-3;
    p.i_sens_A = j.at("i_sens_mA").get<double>() * 1e-3;
    p.i_write_A = j.at("i_write_mA").get<double>() * 1e-3;
    p.t_write_s = j.at("t_write_ms").get<double>() * 1e-3;
    p.i_read_A = j.at("i_read_mA").get<double>() * 1e-3;
    p.t_read_s = j.at("t_read_us").get<double>() * 1e-6;
    p.i_active_A = j.at("i_active_mA").get<double>() * 1e-3;
    p.t_active_s = j.at("t_active_ms").get<double>() * 1e-3;
    p.i_sleep_A = j.at("i_sleep_uA").get<double>() * 1e-6;
    p.t_sleep_s = j.at("t_sleep_ms").get<double>() * 1e-3;
    p.e_elec_J_per_bit = j.at("e_elec_nJ_per_bit").get<double>() * 1e-9;
    p.e_fs_J_per_bit_m2 = j.at("e_fs_pJ_per_bit_m2").get<double>() * 1e-12;
    p.e_mp_J_per_bit_m4 = j.at("e_mp_pJ_per_bit_m4").get<double>() * 1e-12;
    p.e_aggregation_J = j.value("e_aggregation_J", 0.0);
    p.packet_bits = j.at("packet_bits").get<double>();
    p.alpha = j.at("alpha").get<double>();
    p.initial_energy_J = j.at("initial_energy_J").get<double>();
    return p;
}

json scenario_to_json(const Scenario& s) {
    json harvest{
        {"electrical_damping_Ns_per_m", s.harvest.electrical_damping_Ns_per_m},
        {"excitation",
         {{"amplitude_m", s.harvest.excitation.amplitude_m},
          {"frequency_rad_s", s.harvest.excitation.frequency_rad_s}}},
        {"dt_s", s.harvest.dt_s},
        {"capacity_J", s.harvest.capacity_J},
        {"activity_window_s", s.harvest.activity_window_s},
        {"tx_distance_m", s.harvest.tx_distance_m},
        {"setpoint_gain_m", s.harvest.setpoint_gain_m},
        {"setpoint_floor", s.harvest.setpoint_floor},
    };
    if (s.harvest.controller)
        harvest["controller"] = {{"kp", s.harvest.controller->kp},
                                 {"ki", s.harvest.controller->ki},
                                 {"kd", s.harvest.controller->kd}};
    else
        harvest["controller"] = nullptr;

    json tuning{{"search",
                 {{"sample_period_s", s.tuning.search.sample_period_s},
                  {"gain_lo", s.tuning.search.gain_lo},
                  {"gain_hi", s.tuning.search.gain_hi},
                  {"gain_tolerance", s.tuning.search.gain_tolerance},
                  {"cycles_required", s.tuning.search.cycles_required},
                  {"amplitude_ratio_band", s.tuning.search.amplitude_ratio_band}}}};
    if (s.tuning.ultimate) {
        tuning["ku"] = s.tuning.ultimate->ku;
        tuning["tu_s"] = s.tuning.ultimate->tu_s;
    }

    json sim = json::object();
    if (s.sim.dt_s) sim["dt_s"] = *s.sim.dt_s;
    if (s.sim.t_end_s) sim["t_end_s"] = *s.sim.t_end_s;

    return json{
        {"name", s.name},
        {"energy", energy_params_to_json(s.energy)},
        {"plant",
         {{"mass_kg", s.plant.mass_kg},
          {"damping_Ns_per_m", s.plant.damping_Ns_per_m},
          {"stiffness_N_per_m", s.plant.stiffness_N_per_m}}},
        {"harvest", harvest},
        {"tuning", tuning},
        {"sim", sim},
    };
}

Scenario scenario_from_json(const json& j) {
    Scenario s;
    s.name = j.value("name", "scenario");
    s.energy = energy_params_from_json(j.at("energy"));

    const json& pl = j.at("plant");
    s.plant.mass_kg = pl.at("mass_kg").get<double>();
    s.plant.damping_Ns_per_m = pl.at("damping_Ns_per_m").get<double>();
    s.plant.stiffness_N_per_m = pl.at("stiffness_N_per_m").get<double>();

    const json& h = j.at("harvest");
    s.harvest.electrical_damping_Ns_per_m = h.at("electrical_damping_Ns_per_m").get<double>();
    s.harvest.excitation.amplitude_m = h.at("excitation").at("amplitude_m").get<double>();
    s.harvest.excitation.frequency_rad_s = h.at("excitation").value("frequency_rad_s", 0.0);
    if (h.contains("controller") && !h.at("controller").is_null()) {
        const json& c = h.at("controller");
        s.harvest.controller =
            PidGains{c.at("kp").get<double>(), c.at("ki").get<double>(), c.at("kd").get<double>()};
    } else {
        s.harvest.controller.reset();
    }
    s.harvest.dt_s = h.value("dt_s", 1e-3);
    s.harvest.capacity_J = h.at("capacity_J").get<double>();
    s.harvest.activity_window_s = h.value("activity_window_s", 0.3);
    s.harvest.tx_distance_m = h.value("tx_distance_m", 50.0);
    s.harvest.setpoint_gain_m = h.value("setpoint_gain_m", 0.25);
    s.harvest.setpoint_floor = h.value("setpoint_floor", 0.25);

    if (j.contains("tuning")) {
        const json& t = j.at("tuning");
        if (t.contains("ku") || t.contains("tu_s"))
            s.tuning.ultimate = UltimateParams{t.at("ku").get<double>(), t.at("tu_s").get<double>()};
        if (t.contains("search")) {
            const json& sc = t.at("search");
            s.tuning.search.sample_period_s = sc.value("sample_period_s", 0.05);
            s.tuning.search.gain_lo = sc.value("gain_lo", 0.5);
            s.tuning.search.gain_hi = sc.value("gain_hi", 100.0);
            s.tuning.search.gain_tolerance = sc.value("gain_tolerance", 1e-3);
            s.tuning.search.cycles_required = sc.value("cycles_required", 5);
            s.tuning.search.amplitude_ratio_band = sc.value("amplitude_ratio_band", 0.05);
        }
    }
    if (j.contains("sim")) {
        const json& sim = j.at("sim");
        if (sim.contains("dt_s")) s.sim.dt_s = sim.at("dt_s").get<double>();
        if (sim.contains("t_end_s")) s.sim.t_end_s = sim.at("t_end_s").get<double>();
    }
    return s;
}

json to_json(const StepMetrics& m) {
    return json{
        {"dc_gain", m.dc_gain},
        {"rise_time_s", m.rise_time_s},
        {"settling_time_s", m.settling_time_s},
        {"percent_overshoot", m.percent_overshoot},
        {"peak_value", m.peak_value},
        {"peak_time_s", m.peak_time_s},
    };
}

json to_json(const RouthTable& t) {
    return json{
        {"degree", t.degree},
        {"rows", t.rows},
        {"first_column", t.first_column()},
        {"notes", t.special_case_notes},
        {"epsilon_used", t.epsilon_used},
    };
}

json to_json(const StabilityVerdict& v, const RouthTable& t) {
    const char* kind = v.kind == StabilityKind::Stable   ? "stable"
                       : v.kind == StabilityKind::Unstable ? "unstable"
                                                           : "marginal";
    json out = to_json(t);
    out["verdict"] = kind;
    out["sign_changes"] = v.sign_changes;
    out["notes"] = v.notes;
    return out;
}

json tuning_report_json(const UltimateParams& u, const PidGains& g, std::optional<double> sample_period_s) {
    json out{
        {"ku", u.ku}, {"tu_s", u.tu_s}, {"kp", g.kp}, {"ki", g.ki}, {"kd", g.kd},
    };
    out["sample_period_s"] = sample_period_s ? json(*sample_period_s) : json(nullptr);
    return out;
}

json energy_report_json(const EnergyParams& p, double distance_m) {
    const EnergyBreakdown b = cycle_energy(p, distance_m);
    const double d0 = threshold_distance(p);
    return json{
        {"sense_J", b.sense_J},
        {"process_J", b.process_J},
        {"transmit_J", b.transmit_J},
        {"receive_J", b.receive_J},
        {"mcu_switch_J", b.mcu_switch_J},
        {"total_J", b.total_J},
        {"distance_m", distance_m},
        {"d0_m", d0},
        {"branch", distance_m < d0 ? "free-space" : "multipath"},
    };
}

json node_summary_json(const RunResult& result) {
    const auto& samples = result.trace.samples;

    double min_r = samples.empty() ? 0.0 : samples.front().residual_J;
    double max_r = min_r;
    double harvested = 0.0, consumed = 0.0;
    for (const auto& s : samples) {
        min_r = std::min(min_r, s.residual_J);
        max_r = std::max(max_r, s.residual_J);
        harvested += s.harvested_J;
        consumed += s.consumed_J;
    }

    json out{
        {"min_residual_J", min_r},
        {"max_residual_J", max_r},
        {"harvested_J", harvested},
        {"consumed_J", consumed},
        {"excitation_work_J", result.final_state.excitation_work_J},
        {"control_work_J", result.final_state.control_work_J},
        {"t_end_s", samples.empty() ? 0.0 : samples.back().t_s},
        {"dt_s", result.trace.dt_s},
    };

    // First completed recharge: first Off phase that ends in an On step.
    out["first_recharge_s"] = nullptr;
    std::size_t off_start = 0;
    bool in_off = false;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!in_off && samples[i - 1].mode == McuMode::On && samples[i].mode == McuMode::Off) {
            in_off = true;
            off_start = i;
        } else if (in_off && samples[i].mode == McuMode::On) {
            out["first_recharge_s"] = samples[i].t_s - samples[off_start].t_s;
            break;
        }
    }

    try {
        const CycleStats stats = detect_cycle(result.trace);
        out["cycles"] = stats.cycles;
        out["periodic"] = stats.periodic;
        out["period_s"] = stats.period_s;
        out["duty_fraction"] = stats.duty_fraction;
    } catch (const InsufficientCyclesError&) {
        int transitions = 0;
        for (std::size_t i = 1; i < samples.size(); ++i)
            if (samples[i - 1].mode == McuMode::On && samples[i].mode == McuMode::Off) ++transitions;
        out["cycles"] = std::max(0, transitions - 1);
        out["periodic"] = false;
        out["period_s"] = nullptr;
        out["duty_fraction"] = nullptr;
    }
    return out;
}

}  // namespace piezonode
