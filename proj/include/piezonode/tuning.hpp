#pragma once

#include <vector>

#include "piezonode/pid.hpp"
#include "piezonode/transfer_function.hpp"

namespace piezonode {

struct OscillationSearchConfig {
    double sample_period_s = 0.05;      // proportional controller update interval (zero-order hold)
    double gain_lo = 0.5;
    double gain_hi = 100.0;
    double gain_tolerance = 1e-3;       // relative bracket width at termination
    int cycles_required = 5;            // consecutive periods that must hold their amplitude
    double amplitude_ratio_band = 0.05; // |a_{k+1}/a_k - 1| bound for "sustained"

    void validate() const;
};

enum class OscillationKind { Decaying, Sustained, Growing };

/// Unit-step response of the closed loop: proportional controller sampled
/// every sample_period_s with zero-order hold, plant integrated continuously
/// between updates. Stops early (diverged = true) once |y| blows up.
struct LoopResponse {
    std::vector<double> t;
    std::vector<double> y;
    bool diverged = false;
};

LoopResponse sampled_proportional_loop(const TransferFunction& plant, double gain, double sample_period_s,
                                       double t_max_s);

struct OscillationAnalysis {
    OscillationKind kind = OscillationKind::Decaying;
    double mean_period_s = 0.0;  // mean peak-to-peak period over the classification window
    int peak_count = 0;          // usable oscillation peaks found
};

/// Peak-picking with quadratic interpolation of peak positions; the verdict
/// looks at the last cycles_required amplitude ratios.
OscillationAnalysis analyze_oscillation(const LoopResponse& r, int cycles_required, double amplitude_ratio_band);

/// Bisection over proportional gain for the smallest gain whose sampled loop
/// sustains oscillation. Throws NoUltimateGainError when the range does not
/// bracket the stability boundary.
UltimateParams find_ultimate(const TransferFunction& plant, const OscillationSearchConfig& cfg);

}  // namespace piezonode
