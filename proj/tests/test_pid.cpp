#include <doctest.h>

#include <cmath>
#include <random>

#include "piezonode/msd.hpp"
#include "piezonode/pid.hpp"

using namespace piezonode;

namespace {

const MsdParams kMica2Plant{0.182, 0.2, 1.2320};
const PidGains kPaperGains{20.2366, 10.3729, 9.8699};

// Strip an exact common factor s^k so canonical and composed forms compare.
TransferFunction cancel_origin_factors(TransferFunction tf) {
    auto num = tf.num.coeffs();
    auto den = tf.den.coeffs();
    while (num.size() > 1 && den.size() > 1 && num.back() == 0.0 && den.back() == 0.0) {
        num.pop_back();
        den.pop_back();
    }
    return TransferFunction(Polynomial(num), Polynomial(den));
}

}  // namespace

TEST_SUITE("pid") {

TEST_CASE("pid transfer function shapes") {
    const TransferFunction paper = pid_tf(kPaperGains);
    CHECK(paper.num.coeffs() == std::vector<double>{9.8699, 20.2366, 10.3729});
    CHECK(paper.den.coeffs() == std::vector<double>{1.0, 0.0});

    // P-only keeps the uncancelled s/s representation.
    const TransferFunction p_only = pid_tf(PidGains{1.0, 0.0, 0.0});
    CHECK(p_only.num.coeffs() == std::vector<double>{1.0, 0.0});
    CHECK(p_only.den.coeffs() == std::vector<double>{1.0, 0.0});

    const TransferFunction integrator = pid_tf(PidGains{0.0, 1.0, 0.0});
    CHECK(integrator.num.coeffs() == std::vector<double>{1.0});
    CHECK(integrator.den.coeffs() == std::vector<double>{1.0, 0.0});

    CHECK_THROWS_AS(pid_tf(PidGains{-1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("Ziegler-Nichols table") {
    const PidGains g = zn_gains(UltimateParams{33.727, 3.90176});
    CHECK(std::abs(g.kp - 20.2366) < 5e-4);
    CHECK(std::abs(g.ki - 10.3729) < 5e-4);
    CHECK(std::abs(g.kd - 9.8699) < 5e-4);

    const PidGains unit = zn_gains(UltimateParams{1.0, 1.0});
    CHECK(unit.kp == 0.6);
    CHECK(unit.ki == 1.2);
    CHECK(unit.kd == 0.075);

    const PidGains g2 = zn_gains(UltimateParams{10.0, 2.0});
    CHECK(g2.kp == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(g2.ki == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(g2.kd == doctest::Approx(1.5).epsilon(1e-15));

    CHECK_THROWS_AS(zn_gains(UltimateParams{0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("zn_gains is homogeneous in Ku") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> pos(0.1, 50.0);
    for (int i = 0; i < 50; ++i) {
        const double ku = pos(rng), tu = pos(rng), c = pos(rng);
        const PidGains base = zn_gains(UltimateParams{ku, tu});
        const PidGains scaled = zn_gains(UltimateParams{c * ku, tu});
        CHECK(scaled.kp == doctest::Approx(c * base.kp).epsilon(1e-12));
        CHECK(scaled.ki == doctest::Approx(c * base.ki).epsilon(1e-12));
        CHECK(scaled.kd == doctest::Approx(c * base.kd).epsilon(1e-12));
    }
}

TEST_CASE("closed loop matches the canonical cubic") {
    const TransferFunction t = closed_loop(msd_plant(kMica2Plant), kPaperGains);
    const std::vector<double> want_den{0.182, 0.2 + 9.8699, 1.2320 + 20.2366, 10.3729};
    REQUIRE(t.den.degree() == 3);
    for (std::size_t k = 0; k <= 3; ++k)
        CHECK(t.den.coeff(k) == doctest::Approx(Polynomial(want_den).coeff(k)).epsilon(1e-9));
    CHECK(t.num.coeffs() == std::vector<double>{9.8699, 20.2366, 10.3729});
    CHECK(t.den.coeff(2) == doctest::Approx(10.0699).epsilon(1e-9));
    CHECK(t.den.coeff(1) == doctest::Approx(21.4686).epsilon(1e-9));
    CHECK(dc_gain(t) == 1.0);
}

TEST_CASE("closed loop agrees with the generic unity-feedback composition") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> pos(0.05, 20.0);
    for (int i = 0; i < 100; ++i) {
        const MsdParams plant{pos(rng), pos(rng), pos(rng)};
        const PidGains gains{pos(rng), pos(rng), pos(rng)};
        const TransferFunction direct = closed_loop(msd_plant(plant), gains);
        const TransferFunction composed =
            cancel_origin_factors(unity_feedback(msd_plant(plant), pid_tf(gains)).complementary);

        const double norm_direct = direct.den.leading();
        const double norm_composed = composed.den.leading();
        REQUIRE(direct.den.degree() == composed.den.degree());
        for (std::size_t k = 0; k <= direct.den.degree(); ++k)
            CHECK(direct.den.coeff(k) / norm_direct ==
                  doctest::Approx(composed.den.coeff(k) / norm_composed).epsilon(1e-9));
        REQUIRE(direct.num.degree() == composed.num.degree());
        for (std::size_t k = 0; k <= direct.num.degree(); ++k)
            CHECK(direct.num.coeff(k) / norm_direct ==
                  doctest::Approx(composed.num.coeff(k) / norm_composed).epsilon(1e-9));
    }
}

TEST_CASE("P-only closed loop reduces to a second-order lag") {
    const double k = 3.0;
    const TransferFunction t = closed_loop(msd_plant(kMica2Plant), PidGains{k, 0.0, 0.0});
    CHECK(t.num.coeffs() == std::vector<double>{k});
    CHECK(t.den.coeffs() == std::vector<double>{0.182, 0.2, 1.2320 + k});
}

TEST_CASE("closed loop rejects non-MSD plants") {
    CHECK_THROWS_AS(closed_loop(TransferFunction(Polynomial{1.0}, Polynomial{1.0, 1.0}), kPaperGains),
                    std::invalid_argument);
    CHECK_THROWS_AS(closed_loop(TransferFunction(Polynomial{2.0}, Polynomial{1.0, 1.0, 1.0}), kPaperGains),
                    std::invalid_argument);
}

TEST_CASE("discrete PID bookkeeping") {
    DiscretePid pid(PidGains{2.0, 1.0, 0.5});
    // First update: no derivative kick.
    CHECK(pid.update(1.0, 0.1) == doctest::Approx(2.0 + 1.0 * 0.1).epsilon(1e-15));
    // Second update: integral has both samples, derivative sees the change.
    CHECK(pid.update(2.0, 0.1) == doctest::Approx(4.0 + 0.3 + 0.5 * 10.0).epsilon(1e-12));
    pid.reset();
    CHECK(pid.update(1.0, 0.1) == doctest::Approx(2.1).epsilon(1e-15));
}

}  // TEST_SUITE
