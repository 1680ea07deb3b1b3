#pragma once

#include <complex>

#include "piezonode/polynomial.hpp"

namespace piezonode {

/// Rational function num/den in the Laplace variable s.
struct TransferFunction {
    Polynomial num;
    Polynomial den;

    TransferFunction(Polynomial numerator, Polynomial denominator);

    double operator()(double s) const { return num(s) / den(s); }
    std::complex<double> operator()(std::complex<double> s) const { return num(s) / den(s); }

    /// deg(num) <= deg(den); the zero numerator counts as proper.
    bool proper() const { return num.is_zero() || num.degree() <= den.degree(); }
};

/// Steady-state gain num(0)/den(0). Throws std::domain_error when the
/// function has a pole at the origin (e.g. any controller with an
/// integrator).
double dc_gain(const TransferFunction& tf);

struct FeedbackFunctions {
    TransferFunction sensitivity;        // E = 1/(1+PU)
    TransferFunction complementary;      // T = PU/(1+PU)
    TransferFunction input_sensitivity;  // I = U/(1+PU)
};

/// Closed-loop transfer functions of the unity-feedback loop with forward
/// path U then P. All three share the expanded common denominator
/// Pden*Uden + Pnum*Unum, so E + T = 1 holds coefficient-exactly.
FeedbackFunctions unity_feedback(const TransferFunction& plant, const TransferFunction& controller);

}  // namespace piezonode
