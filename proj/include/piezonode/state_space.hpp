#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "piezonode/transfer_function.hpp"

namespace piezonode {

/// x' = A x + B u,  y = C x + D u
struct StateSpace {
    Eigen::MatrixXd A;
    Eigen::VectorXd B;
    Eigen::RowVectorXd C;
    double D = 0.0;

    Eigen::Index order() const { return A.rows(); }
};

/// Controllable canonical realization. Rejects improper transfer functions;
/// a constant gain yields the zero-dimensional realization (D only).
StateSpace to_state_space(const TransferFunction& tf);

/// Reconstructs C (sI - A)^-1 B + D via the Faddeev-LeVerrier recursion.
/// The returned denominator is monic, so compare coefficients after
/// normalizing the input the same way.
TransferFunction to_transfer_function(const StateSpace& ss);

/// Denominator roots, from the companion-matrix eigenvalues.
std::vector<std::complex<double>> poles(const TransferFunction& tf);

}  // namespace piezonode
