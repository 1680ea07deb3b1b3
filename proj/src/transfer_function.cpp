#include "piezonode/transfer_function.hpp"

#include <stdexcept>

namespace piezonode {

TransferFunction::TransferFunction(Polynomial numerator, Polynomial denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
    if (den.is_zero()) throw std::invalid_argument("transfer function denominator is the zero polynomial");
}

double dc_gain(const TransferFunction& tf) {
    const double d0 = tf.den.constant_term();
    if (d0 == 0.0) throw std::domain_error("dc gain undefined: pole at s = 0");
    return tf.num.constant_term() / d0;
}

FeedbackFunctions unity_feedback(const TransferFunction& plant, const TransferFunction& controller) {
    const Polynomial open_num = plant.num * controller.num;
    const Polynomial open_den = plant.den * controller.den;
    if (!open_num.is_zero() && open_num.degree() > open_den.degree())
        throw std::invalid_argument("open-loop product P*U is improper");

    const Polynomial common = open_den + open_num;  // denominator of 1 + PU over open_den
    if (common.is_zero()) throw std::invalid_argument("unity feedback loop has zero denominator (PU = -1)");

    return FeedbackFunctions{
        TransferFunction(open_den, common),
        TransferFunction(open_num, common),
        TransferFunction(controller.num * plant.den, common),
    };
}

}  // namespace piezonode
