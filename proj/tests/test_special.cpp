#include "doctest.h"

#include <cmath>
#include <numbers>

#include "meixner/bessel.hpp"
#include "meixner/gammafn.hpp"

#include "test_util.hpp"

using namespace meixner;
using std::numbers::pi;

TEST_CASE("gamma classical values") {
    CHECK(testutil::close(complex_gamma({5.0, 0.0}), {24.0, 0.0}, 1e-13));
    CHECK(testutil::close(complex_gamma({0.5, 0.0}), {std::sqrt(pi), 0.0}, 1e-13));
    CHECK(testutil::close(complex_gamma({1.0, 0.0}), {1.0, 0.0}, 1e-13));
    // reflection side
    CHECK(testutil::close(complex_gamma({-0.5, 0.0}), {-2.0 * std::sqrt(pi), 0.0}, 1e-12));
    CHECK_THROWS_AS(complex_gamma({-3.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(complex_gamma({0.0, 0.0}), std::domain_error);
}

TEST_CASE("gamma conjugation symmetry") {
    auto rng = testutil::make_rng(101);
    std::uniform_real_distribution<double> re(-8.0, 12.0), im(0.1, 10.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::complex<double> z{re(rng), im(rng)};
        if (is_nonpositive_integer(z)) continue;
        auto a = std::conj(complex_gamma(z));
        auto b = complex_gamma(std::conj(z));
        CHECK(testutil::close(a, b, 1e-12));
    }
}

TEST_CASE("gamma recurrence z Gamma(z) = Gamma(z+1)") {
    auto rng = testutil::make_rng(103);
    std::uniform_real_distribution<double> re(-10.0, 20.0), im(-20.0, 20.0);
    for (int trial = 0; trial < 60; ++trial) {
        std::complex<double> z{re(rng), im(rng)};
        if (is_nonpositive_integer(z) || std::abs(z) < 1e-3) continue;
        CHECK(testutil::close(z * complex_gamma(z), complex_gamma(z + 1.0), 1e-11));
    }
}

TEST_CASE("gamma accuracy at moderate modulus") {
    // |z| up to 50 keeps 12 significant digits against the recurrence ladder
    std::complex<double> z{30.5, 39.0};
    auto lhs = complex_gamma(z + 1.0);
    auto rhs = z * complex_gamma(z);
    CHECK(testutil::close(lhs, rhs, 1e-12));
    CHECK(testutil::close(std::exp(complex_log_gamma(z)), complex_gamma(z), 1e-12));
}

TEST_CASE("bessel K half-integer closed form") {
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
        double expect = std::sqrt(pi / (2.0 * x)) * std::exp(-x);
        CHECK(testutil::close(bessel_k(0.5, x), expect, 1e-10));
    }
    CHECK(bessel_k(0.5, 1.0) == doctest::Approx(0.4610685044).epsilon(1e-9));
}

TEST_CASE("bessel K symmetry in the order") {
    auto rng = testutil::make_rng(107);
    std::uniform_real_distribution<double> th(-3.0, 3.0), xs(0.2, 8.0);
    for (int trial = 0; trial < 15; ++trial) {
        double theta = th(rng), x = xs(rng);
        CHECK(testutil::close(bessel_k(theta, x), bessel_k(-theta, x), 1e-10));
    }
    CHECK_THROWS_AS(bessel_k(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), std::domain_error);
}

TEST_CASE("bessel integral path vs series path") {
    // integer order, where the series path goes through the limit
    CHECK(testutil::close(bessel_k(1.0, 2.0), bessel_k_series(1.0, 2.0), 1e-9));
    CHECK(testutil::close(bessel_k(0.0, 1.0), bessel_k_series(0.0, 1.0), 1e-9));
    // non-integer orders
    for (double theta : {0.25, 0.5, 1.5, 2.75}) {
        for (double x : {0.5, 1.5, 4.0}) {
            CHECK(testutil::close(bessel_k(theta, x), bessel_k_series(theta, x), 1e-9));
        }
    }
}
