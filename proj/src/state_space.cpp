#include "piezonode/state_space.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace piezonode {

StateSpace to_state_space(const TransferFunction& tf) {
    if (!tf.proper()) throw std::invalid_argument("state-space realization requires deg(num) <= deg(den)");
    const double lead = tf.den.leading();
    if (lead == 0.0) throw std::invalid_argument("denominator leading coefficient is zero");

    const auto n = static_cast<Eigen::Index>(tf.den.degree());

    // Monic denominator s^n + a_{n-1} s^{n-1} + ... + a_0 and the matching
    // scaled numerator.
    std::vector<double> a(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k)
        a[static_cast<std::size_t>(k)] = tf.den.coeff(static_cast<std::size_t>(k)) / lead;

    std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::size_t k = 0; k <= tf.num.degree(); ++k)
        if (!tf.num.is_zero()) b[k] = tf.num.coeff(k) / lead;

    // Feedthrough from the s^n numerator term, then the strictly proper rest.
    const double d = b[static_cast<std::size_t>(n)];
    StateSpace ss;
    ss.D = d;
    ss.A = Eigen::MatrixXd::Zero(n, n);
    ss.B = Eigen::VectorXd::Zero(n);
    ss.C = Eigen::RowVectorXd::Zero(n);
    if (n == 0) return ss;

    for (Eigen::Index i = 0; i + 1 < n; ++i) ss.A(i, i + 1) = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) ss.A(n - 1, j) = -a[static_cast<std::size_t>(j)];
    ss.B(n - 1) = 1.0;
    for (Eigen::Index k = 0; k < n; ++k)
        ss.C(k) = b[static_cast<std::size_t>(k)] - d * a[static_cast<std::size_t>(k)];
    return ss;
}

TransferFunction to_transfer_function(const StateSpace& ss) {
    const auto n = ss.order();
    if (n == 0) return TransferFunction(Polynomial{ss.D}, Polynomial{1.0});

    // Faddeev-LeVerrier: den(s) = det(sI - A) monic, adj(sI - A) = sum N_k s^{n-1-k}.
    std::vector<double> den(static_cast<std::size_t>(n) + 1, 0.0);
    den[0] = 1.0;
    std::vector<double> num_strict(static_cast<std::size_t>(n), 0.0);

    Eigen::MatrixXd N = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        num_strict[static_cast<std::size_t>(k - 1)] = (ss.C * N * ss.B).value();
        const Eigen::MatrixXd AN = ss.A * N;
        const double c = -AN.trace() / static_cast<double>(k);
        den[static_cast<std::size_t>(k)] = c;
        N = AN + c * Eigen::MatrixXd::Identity(n, n);
    }

    Polynomial denominator(den);
    Polynomial numerator = Polynomial(num_strict) + ss.D * denominator;
    return TransferFunction(std::move(numerator), std::move(denominator));
}

std::vector<std::complex<double>> poles(const TransferFunction& tf) {
    const auto n = tf.den.degree();
    if (n == 0) return {};
    const double lead = tf.den.leading();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i + 1 < n; ++i)
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = 1.0;
    for (std::size_t j = 0; j < n; ++j)
        companion(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(j)) = -tf.den.coeff(j) / lead;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    return out;
}

}  // namespace piezonode
