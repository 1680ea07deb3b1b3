#pragma once

#include <optional>
#include <string>
#include <vector>

#include "piezonode/energy.hpp"
#include "piezonode/msd.hpp"
#include "piezonode/nodesim.hpp"
#include "piezonode/tuning.hpp"

namespace piezonode {

struct SimSettings {
    std::optional<double> dt_s;     // command-specific defaults apply when unset
    std::optional<double> t_end_s;
};

struct TuningSpec {
    std::optional<UltimateParams> ultimate;  // direct Ku/Tu entry
    OscillationSearchConfig search;
};

/// Everything one analysis or simulation needs, with cross-field checks.
struct Scenario {
    std::string name;
    EnergyParams energy;
    MsdParams plant;
    HarvestConfig harvest;
    TuningSpec tuning;
    SimSettings sim;

    void validate() const;
};

/// Built-in parameter sets. "mica2" is the Mica2-mote set with alpha = 0.2;
/// "mica2-full" is the uncompressed (alpha = 1) variant.
Scenario preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace piezonode
