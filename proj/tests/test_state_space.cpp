#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "piezonode/msd.hpp"
#include "piezonode/pid.hpp"
#include "piezonode/state_space.hpp"

using namespace piezonode;

TEST_SUITE("lti") {

TEST_CASE("first-order canonical form") {
    const StateSpace ss = to_state_space(TransferFunction(Polynomial{1.0}, Polynomial{1.0, 1.0}));
    REQUIRE(ss.order() == 1);
    CHECK(ss.A(0, 0) == -1.0);
    CHECK(ss.B(0) == 1.0);
    CHECK(ss.C(0) == 1.0);
    CHECK(ss.D == 0.0);
}

TEST_CASE("constant gain is zero-dimensional") {
    const StateSpace ss = to_state_space(TransferFunction(Polynomial{3.5}, Polynomial{1.0}));
    CHECK(ss.order() == 0);
    CHECK(ss.D == 3.5);
    const TransferFunction back = to_transfer_function(ss);
    CHECK(back.num.coeffs() == std::vector<double>{3.5});
    CHECK(back.den.coeffs() == std::vector<double>{1.0});
}

TEST_CASE("improper transfer functions are rejected") {
    CHECK_THROWS_AS(to_state_space(pid_tf(PidGains{1.0, 1.0, 1.0})), std::invalid_argument);
}

TEST_CASE("MSD companion matrix matches the quadratic-root oracle") {
    const MsdParams p{0.182, 0.2, 1.2320};
    const StateSpace ss = to_state_space(msd_plant(p));
    REQUIRE(ss.order() == 2);
    CHECK(ss.A(1, 0) == doctest::Approx(-p.stiffness_N_per_m / p.mass_kg).epsilon(1e-15));
    CHECK(ss.A(1, 1) == doctest::Approx(-p.damping_Ns_per_m / p.mass_kg).epsilon(1e-15));

    // Analytic roots of M s^2 + D s + K.
    const double wn = p.natural_frequency_rad_s();
    const double zeta = p.damping_ratio();
    const std::complex<double> want(-zeta * wn, wn * std::sqrt(1.0 - zeta * zeta));

    auto ps = poles(msd_plant(p));
    REQUIRE(ps.size() == 2);
    std::sort(ps.begin(), ps.end(), [](auto a, auto b) { return a.imag() < b.imag(); });
    CHECK(ps[1].real() == doctest::Approx(want.real()).epsilon(1e-12));
    CHECK(ps[1].imag() == doctest::Approx(want.imag()).epsilon(1e-12));
}

TEST_CASE("round trip through the realization reproduces the coefficients") {
    std::mt19937 rng(40902);
    std::uniform_int_distribution<int> deg(1, 6);
    std::uniform_real_distribution<double> root(-3.0, -0.2);
    std::uniform_real_distribution<double> gain(0.2, 4.0);
    std::bernoulli_distribution equal_degree(0.3);

    for (int trial = 0; trial < 200; ++trial) {
        const int n = deg(rng);
        std::vector<double> den_roots, num_roots;
        for (int i = 0; i < n; ++i) den_roots.push_back(root(rng));
        const int num_degree = equal_degree(rng) ? n : std::uniform_int_distribution<int>(0, n - 1)(rng);
        for (int i = 0; i < num_degree; ++i) num_roots.push_back(root(rng));

        const TransferFunction tf(oracles::poly_from_roots(num_roots, {}, gain(rng)),
                                  oracles::poly_from_roots(den_roots, {}, gain(rng)));
        const TransferFunction back = to_transfer_function(to_state_space(tf));

        // to_transfer_function returns a monic denominator; normalize tf too.
        const double lead = tf.den.leading();
        REQUIRE(back.den.degree() == tf.den.degree());
        for (std::size_t k = 0; k <= tf.den.degree(); ++k)
            CHECK(back.den.coeff(k) == doctest::Approx(tf.den.coeff(k) / lead).epsilon(1e-9));
        REQUIRE(back.num.degree() == tf.num.degree());
        for (std::size_t k = 0; k <= tf.num.degree(); ++k)
            CHECK(back.num.coeff(k) == doctest::Approx(tf.num.coeff(k) / lead).epsilon(1e-9));
    }
}

}  // TEST_SUITE
