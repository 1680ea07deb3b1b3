#pragma once

#include "piezonode/transfer_function.hpp"

namespace piezonode {

struct PidGains {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;

    void validate() const;  // all gains non-negative
};

/// U(s) = (kd s^2 + kp s + ki) / s. The s/s pair of a P-only controller is
/// kept in the representation rather than cancelled.
TransferFunction pid_tf(const PidGains& g);

struct UltimateParams {
    double ku = 0.0;    // gain at the edge of sustained oscillation
    double tu_s = 0.0;  // oscillation period at that gain

    void validate() const;
};

/// Classic Ziegler-Nichols PID row: kp = 0.6 Ku, ki = 1.2 Ku/Tu, kd = 0.075 Ku Tu.
PidGains zn_gains(const UltimateParams& u);

/// Reference-to-output transfer function of the PID loop around an MSD plant
/// 1/(M s^2 + D s + K), written directly as
///   (kd s^2 + kp s + ki) / (M s^3 + (D+kd) s^2 + (K+kp) s + ki).
/// Agrees with unity_feedback(plant, pid_tf(gains)).complementary.
TransferFunction closed_loop(const TransferFunction& plant, const PidGains& gains);

/// Sampled PID: rectangular integral, backward-difference derivative,
/// derivative suppressed on the first update after a reset.
class DiscretePid {
public:
    explicit DiscretePid(const PidGains& g) : gains_(g) {}

    double update(double error, double dt_s);
    void reset();

private:
    PidGains gains_;
    double integral_ = 0.0;
    double prev_error_ = 0.0;
    bool primed_ = false;
};

}  // namespace piezonode
