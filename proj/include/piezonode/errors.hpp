#pragma once

#include <stdexcept>

namespace piezonode {

/// A trace never reached steady state, so step metrics would be garbage.
struct NotSettledError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The ultimate-gain search could not find a sustained oscillation inside
/// the configured gain range.
struct NoUltimateGainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Duty-cycle configuration whose On phase can never complete: a single
/// activity cycle costs more than the usable band between the recharge
/// reference and the low-battery threshold.
struct LivelockError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fewer mode transitions than cycle detection needs.
struct InsufficientCyclesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace piezonode
