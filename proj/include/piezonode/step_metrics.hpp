#pragma once

#include "piezonode/simulate.hpp"

namespace piezonode {

struct StepMetrics {
    double dc_gain;            // steady-state output per unit input
    double rise_time_s;        // 10% -> 90% of steady state
    double settling_time_s;    // last exit from the +/-2% band around steady state
    double percent_overshoot;  // 100*(peak - ss)/ss, never negative
    double peak_value;
    double peak_time_s;
};

/// Steady state is the mean of the final 5% of samples. Throws
/// NotSettledError unless those samples all stay within +/-1% of that mean;
/// a trace that has not settled gets an error, never garbage metrics.
StepMetrics step_metrics(const SimTrace& trace);

}  // namespace piezonode
