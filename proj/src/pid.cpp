#include "piezonode/pid.hpp"

#include <stdexcept>

namespace piezonode {

void PidGains::validate() const {
    if (kp < 0.0 || ki < 0.0 || kd < 0.0) throw std::invalid_argument("PID gains must be non-negative");
}

void UltimateParams::validate() const {
    if (!(ku > 0.0)) throw std::invalid_argument("ultimate gain must be positive");
    if (!(tu_s > 0.0)) throw std::invalid_argument("ultimate period must be positive");
}

TransferFunction pid_tf(const PidGains& g) {
    g.validate();
    return TransferFunction(Polynomial{g.kd, g.kp, g.ki}, Polynomial{1.0, 0.0});
}

PidGains zn_gains(const UltimateParams& u) {
    u.validate();
    return PidGains{0.6 * u.ku, 1.2 * u.ku / u.tu_s, 0.075 * u.ku * u.tu_s};
}

TransferFunction closed_loop(const TransferFunction& plant, const PidGains& gains) {
    gains.validate();
    const bool msd_form = plant.den.degree() == 2 && !plant.num.is_zero() && plant.num.degree() == 0 &&
                          plant.num.leading() == 1.0;
    if (!msd_form) throw std::invalid_argument("closed_loop expects an MSD plant 1/(M s^2 + D s + K)");

    const double m = plant.den.coeff(2);
    const double d = plant.den.coeff(1);
    const double k = plant.den.coeff(0);
    std::vector<double> num{gains.kd, gains.kp, gains.ki};
    std::vector<double> den{m, d + gains.kd, k + gains.kp, gains.ki};
    // ki = 0 leaves an exact common factor of s; cancel it so the P/PD
    // reductions come out in lowest terms.
    while (num.size() > 1 && den.size() > 1 && num.back() == 0.0 && den.back() == 0.0) {
        num.pop_back();
        den.pop_back();
    }
    return TransferFunction(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

double DiscretePid::update(double error, double dt_s) {
    integral_ += error * dt_s;
    const double derivative = primed_ ? (error - prev_error_) / dt_s : 0.0;
    primed_ = true;
    prev_error_ = error;
    return gains_.kp * error + gains_.ki * integral_ + gains_.kd * derivative;
}

void DiscretePid::reset() {
    integral_ = 0.0;
    prev_error_ = 0.0;
    primed_ = false;
}

}  // namespace piezonode
