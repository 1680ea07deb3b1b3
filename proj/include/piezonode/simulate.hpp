#pragma once

#include <string>
#include <vector>

#include "piezonode/transfer_function.hpp"

namespace piezonode {

struct SimSample {
    double t_s;
    double input;
    double output;
    double doutput;  // time derivative of the output
};

/// Uniformly sampled trace; samples[0] is always t = 0.
struct SimTrace {
    double dt_s = 0.0;
    std::vector<SimSample> samples;

    /// CSV with header `t,input,output,doutput`, 17 significant digits.
    std::string to_csv() const;
};

/// Step response by classical fixed-step 4th-order integration of the
/// controllable-canonical realization. Rejects a dt too coarse for the
/// fastest pole (|lambda|*dt > 2.5 is outside the method's stability
/// region with margin); the error message suggests a usable dt.
SimTrace simulate_step(const TransferFunction& tf, double dt_s, double t_end_s, double amplitude);

}  // namespace piezonode
