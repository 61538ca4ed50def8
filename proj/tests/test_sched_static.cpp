#include <doctest.h>

#include <cmath>

#include "augur/sched_static.hpp"
#include "oracles.hpp"

using namespace augur;

TEST_CASE("perfect classifier collapses predicted to full information") {
    TwoTypeInstance inst{3, 4, 1.0, 5.0, 0.0, 0.0};
    CHECK(two_type_wait(inst, InfoMode::kPredicted) ==
          doctest::Approx(two_type_wait(inst, InfoMode::kFull)));
}

TEST_CASE("total inversion orders longest first") {
    TwoTypeInstance inst{3, 4, 1.0, 5.0, 1.0, 1.0};
    // Longest-job-first: same display with the cross term on the long side.
    double n = 7.0;
    double expected = (3.0 * 2.0 / 2.0 * 1.0 + 4.0 * 3.0 / 2.0 * 5.0 + 3.0 * 4.0 * 5.0) / n;
    CHECK(two_type_wait(inst, InfoMode::kPredicted) == doctest::Approx(expected));
}

TEST_CASE("two-type closed forms match the Monte-Carlo oracle") {
    TwoTypeInstance inst{2, 2, 1.0, 3.0, 0.2, 0.1};
    for (auto mode : {InfoMode::kFull, InfoMode::kNone, InfoMode::kPredicted}) {
        auto mc = oracles::two_type_monte_carlo(inst, mode, 200000, 42);
        double closed = two_type_wait(inst, mode);
        CHECK(std::abs(closed - mc.mean) <= 3.0 * mc.stderr_mean + 1e-9);
    }
}

TEST_CASE("information ordering on a (p, q) grid") {
    TwoTypeInstance inst{4, 3, 1.0, 6.0, 0.0, 0.0};
    for (double p : {0.0, 0.2, 0.45}) {
        for (double q : {0.0, 0.2, 0.45}) {
            inst.p = p;
            inst.q = q;
            double full = two_type_wait(inst, InfoMode::kFull);
            double predicted = two_type_wait(inst, InfoMode::kPredicted);
            double none = two_type_wait(inst, InfoMode::kNone);
            CHECK(predicted >= full - 1e-12);
            if (p + q < 1.0) CHECK(none >= predicted - 1e-12);
        }
    }
}

TEST_CASE("degenerate instances are rejected") {
    CHECK_THROWS(two_type_wait(TwoTypeInstance{0, 0, 1.0, 2.0, 0.0, 0.0}, InfoMode::kFull));
    CHECK_THROWS(two_type_wait(TwoTypeInstance{1, 1, 2.0, 1.0, 0.0, 0.0}, InfoMode::kFull));
    CHECK_THROWS(two_type_wait(TwoTypeInstance{1, 1, 1.0, 2.0, -0.1, 0.0}, InfoMode::kFull));
}

TEST_CASE("exp-exp full-information integral is (n-1)/4") {
    auto density = JointDensity::exp_exp();
    CHECK(continuous_wait(density, InfoMode::kFull, 2) == doctest::Approx(0.25).epsilon(1e-3));
    CHECK(continuous_wait(density, InfoMode::kFull, 11) == doctest::Approx(2.5).epsilon(1e-3));
}

TEST_CASE("exp-exp predicted integral is (n-1)/3") {
    auto density = JointDensity::exp_exp();
    CHECK(continuous_wait(density, InfoMode::kPredicted, 2) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("price of misprediction for exp-exp is 4/3") {
    auto density = JointDensity::exp_exp();
    CHECK(price_of_misprediction_static(density) == doctest::Approx(4.0 / 3.0).epsilon(7.5e-4));
}

TEST_CASE("price tends to one as the noise vanishes") {
    auto exact = JointDensity::uniform_multiplicative(ServiceDistribution::exponential(), 0.0);
    CHECK(price_of_misprediction_static(exact) == doctest::Approx(1.0));
    auto nearly = JointDensity::uniform_multiplicative(ServiceDistribution::exponential(), 1e-3);
    double full = continuous_wait(nearly, InfoMode::kFull, 2);
    double predicted = continuous_wait(nearly, InfoMode::kPredicted, 2);
    CHECK(std::abs(predicted - full) / full < 1e-2);
}

TEST_CASE("density presets are normalized") {
    CHECK(JointDensity::exp_exp().total_mass(1e-6) == doctest::Approx(1.0).epsilon(1e-4));
    auto uniform = JointDensity::uniform_multiplicative(ServiceDistribution::exponential(), 0.5);
    CHECK(uniform.total_mass(1e-6) == doctest::Approx(1.0).epsilon(1e-4));
    auto weibull = JointDensity::uniform_multiplicative(ServiceDistribution::weibull(), 0.3);
    CHECK(weibull.total_mass(1e-6) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("quadrature self-check: tightening tolerance barely moves the result") {
    auto density = JointDensity::uniform_multiplicative(ServiceDistribution::exponential(), 0.5);
    double coarse = continuous_wait(density, InfoMode::kPredicted, 2, 1e-4);
    double fine = continuous_wait(density, InfoMode::kPredicted, 2, 5e-5);
    CHECK(std::abs(coarse - fine) < 10.0 * 1e-4);
}

TEST_CASE("uniform preset price sits strictly between 1 and 4/3") {
    auto density = JointDensity::uniform_multiplicative(ServiceDistribution::exponential(), 0.5);
    double ratio = price_of_misprediction_static(density);
    CHECK(ratio > 1.0);
    CHECK(ratio < 4.0 / 3.0);
    // Regression: frozen from the first quadrature evaluation (tol 1e-5).
    CHECK(std::abs(ratio - 1.043958) < 1e-3);
}
