#include "piezonode/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "piezonode/errors.hpp"
#include "piezonode/format.hpp"
#include "piezonode/state_space.hpp"

namespace piezonode {

namespace {

constexpr double kDivergenceLimit = 1e9;

struct Extremum {
    double t;
    double value;
    bool is_max;
};

// Quadratic refinement of a three-sample extremum.
Extremum refine(double t1, double h, double y0, double y1, double y2, bool is_max) {
    const double denom = y0 - 2.0 * y1 + y2;
    double delta = 0.0;
    if (std::abs(denom) > 1e-300) delta = 0.5 * (y0 - y2) / denom;
    delta = std::clamp(delta, -0.5, 0.5);
    const double value = y1 - 0.25 * (y0 - y2) * delta;
    return {t1 + delta * h, value, is_max};
}

}  // namespace

void OscillationSearchConfig::validate() const {
    if (!(sample_period_s > 0.0)) throw std::invalid_argument("sample period must be positive");
    if (!(gain_lo < gain_hi)) throw std::invalid_argument("gain_lo must be below gain_hi");
    if (gain_lo < 0.0) throw std::invalid_argument("gain_lo must be non-negative");
    if (!(gain_tolerance > 0.0)) throw std::invalid_argument("gain tolerance must be positive");
    if (cycles_required < 3) throw std::invalid_argument("cycles_required must be at least 3");
    if (!(amplitude_ratio_band > 0.0 && amplitude_ratio_band < 0.5))
        throw std::invalid_argument("amplitude_ratio_band must lie in (0, 0.5)");
}

LoopResponse sampled_proportional_loop(const TransferFunction& plant, double gain, double sample_period_s,
                                       double t_max_s) {
    const StateSpace ss = to_state_space(plant);
    const auto n = ss.order();
    const double h = sample_period_s;
    const auto steps = static_cast<std::size_t>(std::llround(t_max_s / h));

    LoopResponse r;
    r.t.reserve(steps + 1);
    r.y.reserve(steps + 1);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd k1(n), k2(n), k3(n), k4(n);

    for (std::size_t i = 0; i <= steps; ++i) {
        // Feedthrough would make y depend on the u being computed; the MSD
        // plant is strictly proper, so refuse the algebraic loop instead.
        if (ss.D != 0.0) throw std::invalid_argument("sampled loop requires a strictly proper plant");
        const double y = n > 0 ? (ss.C * x).value() : 0.0;
        r.t.push_back(static_cast<double>(i) * h);
        r.y.push_back(y);
        if (std::abs(y) > kDivergenceLimit) {
            r.diverged = true;
            break;
        }
        const double u = gain * (1.0 - y);
        if (n > 0) {
            const Eigen::VectorXd Bu = ss.B * u;
            k1 = ss.A * x + Bu;
            k2 = ss.A * (x + 0.5 * h * k1) + Bu;
            k3 = ss.A * (x + 0.5 * h * k2) + Bu;
            k4 = ss.A * (x + h * k3) + Bu;
            x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
    }
    return r;
}

OscillationAnalysis analyze_oscillation(const LoopResponse& r, int cycles_required, double amplitude_ratio_band) {
    OscillationAnalysis out;

    double scale = 0.0;
    for (double y : r.y) scale = std::max(scale, std::abs(y));
    const double amp_floor = 1e-9 * std::max(scale, 1.0);

    std::vector<Extremum> extrema;
    for (std::size_t i = 1; i + 1 < r.y.size(); ++i) {
        const double h = r.t[i + 1] - r.t[i];
        if (r.y[i - 1] < r.y[i] && r.y[i] >= r.y[i + 1])
            extrema.push_back(refine(r.t[i], h, r.y[i - 1], r.y[i], r.y[i + 1], true));
        else if (r.y[i - 1] > r.y[i] && r.y[i] <= r.y[i + 1])
            extrema.push_back(refine(r.t[i], h, r.y[i - 1], r.y[i], r.y[i + 1], false));
    }

    // Full-cycle amplitudes: each maximum paired with the following minimum.
    std::vector<double> peak_t, amp;
    for (std::size_t i = 0; i + 1 < extrema.size(); ++i) {
        if (!extrema[i].is_max || extrema[i + 1].is_max) continue;
        const double a = 0.5 * (extrema[i].value - extrema[i + 1].value);
        if (a <= amp_floor) continue;
        peak_t.push_back(extrema[i].t);
        amp.push_back(a);
    }
    out.peak_count = static_cast<int>(amp.size());

    const auto window = static_cast<std::size_t>(cycles_required) + 1;
    if (amp.size() < window) {
        out.kind = r.diverged ? OscillationKind::Growing : OscillationKind::Decaying;
        return out;
    }

    const std::size_t first = amp.size() - window;
    bool all_in_band = true;
    for (std::size_t i = first; i + 1 < amp.size(); ++i) {
        const double ratio = amp[i + 1] / amp[i];
        if (ratio < 1.0 - amplitude_ratio_band || ratio > 1.0 + amplitude_ratio_band) all_in_band = false;
    }
    out.mean_period_s = (peak_t.back() - peak_t[first]) / static_cast<double>(cycles_required);

    if (r.diverged) {
        out.kind = OscillationKind::Growing;
    } else if (all_in_band) {
        out.kind = OscillationKind::Sustained;
    } else {
        out.kind = amp.back() < amp[first] ? OscillationKind::Decaying : OscillationKind::Growing;
    }
    return out;
}

UltimateParams find_ultimate(const TransferFunction& plant, const OscillationSearchConfig& cfg) {
    cfg.validate();
    if (!plant.proper()) throw std::invalid_argument("ultimate-gain search requires a proper plant");

    double slowest_decay = std::numeric_limits<double>::infinity();
    double min_pole_mag = std::numeric_limits<double>::infinity();
    for (const auto& p : poles(plant)) {
        if (p.real() >= 0.0) throw std::invalid_argument("ultimate-gain search requires an open-loop stable plant");
        slowest_decay = std::min(slowest_decay, -p.real());
        min_pole_mag = std::min(min_pole_mag, std::abs(p));
    }
    if (!std::isfinite(slowest_decay)) throw std::invalid_argument("plant has no poles to oscillate against");

    const double h = cfg.sample_period_s;
    // Enough time for the open-loop transient to die plus a comfortable
    // number of oscillation periods; the period at the boundary cannot be
    // slower than the plant's own slowest rotation or faster than ~4 samples.
    const double period_bound = std::max(4.0 * h, 2.0 * M_PI / min_pole_mag);
    const double t_max = 10.0 / slowest_decay + (20.0 + 4.0 * cfg.cycles_required) * period_bound;

    auto analyze_at = [&](double gain) {
        return analyze_oscillation(sampled_proportional_loop(plant, gain, h, t_max), cfg.cycles_required,
                                   cfg.amplitude_ratio_band);
    };

    if (analyze_at(cfg.gain_hi).kind == OscillationKind::Decaying) {
        throw NoUltimateGainError(
            "no ultimate gain in range: the sampled loop still decays at gain " + fmt_sig(cfg.gain_hi, 6) +
            " with sample period h = " + fmt_sig(h, 6) +
            " s. The boundary gain depends on h (the zero-order hold supplies the phase lag that makes "
            "oscillation possible); at very small h a damped plant may have no finite ultimate gain at all. "
            "Raise gain_hi or increase the sample period.");
    }
    if (analyze_at(cfg.gain_lo).kind != OscillationKind::Decaying) {
        throw NoUltimateGainError("gain range does not bracket the stability boundary: the loop already "
                                  "oscillates at gain_lo = " +
                                  fmt_sig(cfg.gain_lo, 6) + "; lower gain_lo");
    }

    double lo = cfg.gain_lo;
    double hi = cfg.gain_hi;
    while (hi - lo > cfg.gain_tolerance * hi) {
        const double mid = 0.5 * (lo + hi);
        if (analyze_at(mid).kind == OscillationKind::Decaying)
            lo = mid;
        else
            hi = mid;
    }

    const OscillationAnalysis at_ku = analyze_at(hi);
    if (at_ku.peak_count < cfg.cycles_required + 1)
        throw NoUltimateGainError("loop leaves the stable region without a measurable oscillation period");
    return UltimateParams{hi, at_ku.mean_period_s};
}

}  // namespace piezonode
