#include "piezonode/step_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "piezonode/errors.hpp"
#include "piezonode/format.hpp"

namespace piezonode {

namespace {

// First time the sign-adjusted output reaches `threshold`, linearly
// interpolated between the bracketing samples.
double first_crossing(const SimTrace& trace, double sign, double threshold) {
    const auto& s = trace.samples;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double y = sign * s[i].output;
        if (y >= threshold) {
            if (i == 0) return s[0].t_s;
            const double y_prev = sign * s[i - 1].output;
            const double frac = (threshold - y_prev) / (y - y_prev);
            return s[i - 1].t_s + frac * (s[i].t_s - s[i - 1].t_s);
        }
    }
    return s.back().t_s;  // unreachable for a settled trace
}

}  // namespace

StepMetrics step_metrics(const SimTrace& trace) {
    const auto& s = trace.samples;
    if (s.size() < 4) throw std::invalid_argument("trace too short for step metrics");

    const std::size_t tail = std::max<std::size_t>(2, s.size() / 20);
    double mean = 0.0;
    for (std::size_t i = s.size() - tail; i < s.size(); ++i) mean += s[i].output;
    mean /= static_cast<double>(tail);

    const double settle_band = 0.01 * std::abs(mean);
    for (std::size_t i = s.size() - tail; i < s.size(); ++i) {
        if (std::abs(s[i].output - mean) > settle_band)
            throw NotSettledError("trace has not settled: tail sample at t = " + fmt_sig(s[i].t_s, 6) +
                                  " s deviates more than 1% from the tail mean; extend t_end");
    }

    const double ss = mean;
    const double amplitude = s.back().input;

    StepMetrics m{};
    m.dc_gain = amplitude != 0.0 ? ss / amplitude : 0.0;

    if (ss == 0.0) {
        m.peak_time_s = s.front().t_s;
        return m;  // identically settled at zero: all timings degenerate to 0
    }

    const double sign = ss > 0.0 ? 1.0 : -1.0;
    const double mag = std::abs(ss);

    const double t10 = first_crossing(trace, sign, 0.1 * mag);
    const double t90 = first_crossing(trace, sign, 0.9 * mag);
    m.rise_time_s = t90 - t10;

    std::size_t peak_idx = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (sign * s[i].output > sign * s[peak_idx].output) peak_idx = i;
    m.peak_value = s[peak_idx].output;
    m.peak_time_s = s[peak_idx].t_s;
    m.percent_overshoot = std::max(0.0, 100.0 * (sign * m.peak_value - mag) / mag);

    // Last exit from the +/-2% band; the settled tail guarantees re-entry.
    const double band = 0.02 * mag;
    std::size_t last_outside = s.size();
    for (std::size_t i = s.size(); i-- > 0;) {
        if (std::abs(s[i].output - ss) > band) {
            last_outside = i;
            break;
        }
    }
    if (last_outside == s.size()) {
        m.settling_time_s = 0.0;
    } else {
        const double d0 = std::abs(s[last_outside].output - ss);
        const double d1 = std::abs(s[last_outside + 1].output - ss);
        const double frac = (d0 - band) / (d0 - d1);
        m.settling_time_s = s[last_outside].t_s + frac * (s[last_outside + 1].t_s - s[last_outside].t_s);
    }
    return m;
}

}  // namespace piezonode
