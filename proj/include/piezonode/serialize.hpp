#pragma once

#include <optional>

#include <json.hpp>

#include "piezonode/energy.hpp"
#include "piezonode/nodesim.hpp"
#include "piezonode/pid.hpp"
#include "piezonode/routh.hpp"
#include "piezonode/scenario.hpp"
#include "piezonode/step_metrics.hpp"

namespace piezonode {

// Scenario files keep the units the parameter tables use (mA, ms, us, nJ,
// pJ); everything becomes SI at parse time and arithmetic never sees a
// non-SI value again.
nlohmann::json energy_params_to_json(const EnergyParams& p);
EnergyParams energy_params_from_json(const nlohmann::json& j);

nlohmann::json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StepMetrics& m);
nlohmann::json to_json(const RouthTable& t);
nlohmann::json to_json(const StabilityVerdict& v, const RouthTable& t);

nlohmann::json tuning_report_json(const UltimateParams& u, const PidGains& g,
                                  std::optional<double> sample_period_s);

nlohmann::json energy_report_json(const EnergyParams& p, double distance_m);

nlohmann::json node_summary_json(const RunResult& result);

}  // namespace piezonode
