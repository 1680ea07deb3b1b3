#include "piezonode/simulate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "piezonode/format.hpp"
#include "piezonode/state_space.hpp"

namespace piezonode {

std::string SimTrace::to_csv() const {
    std::ostringstream out;
    out << "t,input,output,doutput\n";
    for (const auto& s : samples)
        out << fmt_full(s.t_s) << ',' << fmt_full(s.input) << ',' << fmt_full(s.output) << ','
            << fmt_full(s.doutput) << '\n';
    return out.str();
}

SimTrace simulate_step(const TransferFunction& tf, double dt_s, double t_end_s, double amplitude) {
    if (!(dt_s > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(t_end_s >= dt_s)) throw std::invalid_argument("t_end must be at least one step");

    const StateSpace ss = to_state_space(tf);

    double max_pole = 0.0;
    for (const auto& p : poles(tf)) max_pole = std::max(max_pole, std::abs(p));
    if (max_pole * dt_s > 2.5) {
        throw std::invalid_argument("dt " + fmt_sig(dt_s, 6) + " s is unstable for the fastest pole (|lambda| = " +
                                    fmt_sig(max_pole, 6) + " rad/s); use dt <= " +
                                    fmt_sig(2.5 / max_pole, 3) + " s");
    }

    const auto n = ss.order();
    const auto steps = static_cast<std::size_t>(std::llround(t_end_s / dt_s));

    SimTrace trace;
    trace.dt_s = dt_s;
    trace.samples.reserve(steps + 1);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd k1(n), k2(n), k3(n), k4(n);
    const Eigen::VectorXd Bu = ss.B * amplitude;

    auto record = [&](double t) {
        const double y = (n > 0 ? (ss.C * x).value() : 0.0) + ss.D * amplitude;
        const double dy = n > 0 ? (ss.C * (ss.A * x + Bu)).value() : 0.0;
        trace.samples.push_back({t, amplitude, y, dy});
    };

    record(0.0);
    for (std::size_t i = 1; i <= steps; ++i) {
        if (n > 0) {
            k1 = ss.A * x + Bu;
            k2 = ss.A * (x + 0.5 * dt_s * k1) + Bu;
            k3 = ss.A * (x + 0.5 * dt_s * k2) + Bu;
            k4 = ss.A * (x + dt_s * k3) + Bu;
            x += (dt_s / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        record(static_cast<double>(i) * dt_s);
    }
    return trace;
}

}  // namespace piezonode
