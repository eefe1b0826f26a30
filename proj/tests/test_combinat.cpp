#include "doctest.h"

#include "meixner/combinat.hpp"
#include "meixner/poly.hpp"
#include "meixner/sheffer.hpp"

#include "test_util.hpp"

using namespace meixner;

namespace {

// Independent oracle: the second-kind triangle recurrence, recomputed from
// scratch with no memoization.
Int brute_stirling2(unsigned n, unsigned k) {
    if (n == 0 && k == 0) return 1;
    if (k == 0 || k > n) return 0;
    return brute_stirling2(n - 1, k - 1) + Int(k) * brute_stirling2(n - 1, k);
}

// Independent oracle: expand z(z-1)...(z-(n-1)) by polynomial multiplication
// and read off the coefficient of z^k.
Int falling_factorial_coeff(unsigned n, unsigned k) {
    ExactPoly p = genfact_poly(GaussRational{0}, GaussRational{1}, n);
    GaussRational c = p.coeff(k);
    REQUIRE(denominator(c.re) == 1);
    REQUIRE(c.im == 0);
    return numerator(c.re);
}

Int lah_formula(unsigned n, unsigned k) { return binomial(n - 1, k - 1) * factorial(n) / factorial(k); }

}  // namespace

TEST_CASE("stirling2 values") {
    CHECK(stirling2(4, 4) == 1);
    CHECK(stirling2(4, 2) == brute_stirling2(4, 2));
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(0, 0) == 1);
    for (unsigned n = 0; n <= 9; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(stirling2(n, k) == brute_stirling2(n, k));
    CHECK_THROWS_AS(stirling2(3, 4), std::domain_error);
}

TEST_CASE("stirling2 needs big integers") {
    CHECK(stirling2(26, 13) == Int("1850568574253550060"));
    // beyond 64 bits
    CHECK(stirling2(28, 14) == Int("148782988064375309400"));
}

TEST_CASE("stirling1 signed values") {
    CHECK(stirling1(4, 2) == falling_factorial_coeff(4, 2));
    CHECK(stirling1(4, 2) == 11);
    CHECK(stirling1(4, 3) == -6);
    CHECK(stirling1(6, 6) == 1);
    for (unsigned n = 0; n <= 9; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(stirling1(n, k) == falling_factorial_coeff(n, k));
    CHECK_THROWS_AS(stirling1(2, 3), std::domain_error);
}

TEST_CASE("lah values and errors") {
    CHECK(lah(3, 2) == 6);
    CHECK(lah(4, 2) == 36);
    CHECK(lah(5, 5) == 1);
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 1; k <= n; ++k) CHECK(lah(n, k) == lah_formula(n, k));
    CHECK_THROWS_AS(lah(3, 0), std::domain_error);
}

TEST_CASE("stirling orthogonality") {
    for (unsigned n = 1; n <= 12; ++n) {
        for (unsigned i = 1; i <= n; ++i) {
            Int s1 = 0, s2 = 0;
            for (unsigned k = i; k <= n; ++k) {
                s1 += stirling2(n, k) * stirling1(k, i);
                s2 += stirling1(n, k) * stirling2(k, i);
            }
            Int expect = (n == i) ? 1 : 0;
            CHECK(s1 == expect);
            CHECK(s2 == expect);
        }
    }
}

TEST_CASE("lah consistency: (z)_n = sum (-1)^{n-k} L(n,k) (z)^(k)") {
    for (unsigned n = 1; n <= 10; ++n) {
        ExactPoly falling = genfact_poly(GaussRational{0}, GaussRational{1}, n);
        ExactPoly sum = ExactPoly::zero();
        for (unsigned k = 1; k <= n; ++k) {
            GaussRational c{Rat(lah(n, k))};
            if ((n - k) % 2 == 1) c = -c;
            sum = sum + c * genfact_poly(GaussRational{0}, GaussRational{-1}, k);
        }
        CHECK(falling == sum);
    }
}

TEST_CASE("genfact basics") {
    auto rng = testutil::make_rng(3);
    CHECK(genfact(testutil::random_gauss(rng), testutil::random_gauss(rng), 0) ==
          GaussRational{1});
    CHECK(genfact(GaussRational{5}, GaussRational{1}, 3) == GaussRational{60});
    // (sigma | 0)_n = sigma^n
    GaussRational sigma{Rat(7, 3)};
    for (unsigned n = 0; n <= 6; ++n) CHECK(genfact(sigma, GaussRational{0}, n) == pow_n(sigma, n));
}

TEST_CASE("genfact binomial identity") {
    auto rng = testutil::make_rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        GaussRational z = testutil::random_gauss(rng);
        GaussRational w = testutil::random_gauss(rng);
        GaussRational h = testutil::random_gauss(rng);
        for (unsigned n = 0; n <= 8; ++n) {
            GaussRational sum{0};
            for (unsigned k = 0; k <= n; ++k)
                sum += GaussRational{Rat(binomial(n, k))} * genfact(z, h, k) * genfact(w, h, n - k);
            CHECK(sum == genfact(z + w, h, n));
        }
    }
}

TEST_CASE("gen_stirling special values") {
    auto rng = testutil::make_rng(17);
    GaussRational h = testutil::random_gauss(rng);
    GaussRational r = testutil::random_gauss(rng);
    for (unsigned n = 0; n <= 6; ++n) CHECK(gen_stirling(n, 0, h, r) == genfact(r, h, n));
    CHECK(gen_stirling(2, 2, GaussRational{1}, GaussRational{1}) == GaussRational{1});
    CHECK(gen_stirling(2, 1, GaussRational{1}, GaussRational{1}) == GaussRational{0});
    CHECK_THROWS_AS(gen_stirling(2, 3, h, r), std::domain_error);
}

TEST_CASE("gen_stirling expansion identity") {
    // sum_k S(n,k;h,r) (z|-h)_k = (z+r|h)_n as exact polynomials
    auto rng = testutil::make_rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        GaussRational h = testutil::random_gauss(rng);
        GaussRational r = testutil::random_gauss(rng);
        for (unsigned n = 0; n <= 8; ++n) {
            ExactPoly lhs = ExactPoly::zero();
            for (unsigned k = 0; k <= n; ++k)
                lhs = lhs + gen_stirling(n, k, h, r) * genfact_poly(GaussRational{0}, -h, k);
            CHECK(lhs == genfact_poly(r, h, n));
        }
    }
}

TEST_CASE("gen_stirling triangle recurrence agrees with the lah-sum route") {
    auto rng = testutil::make_rng(29);
    for (int trial = 0; trial < 6; ++trial) {
        GaussRational h = testutil::random_gauss(rng);
        GaussRational r = testutil::random_gauss(rng);
        meixner::detail::GenStirlingTriangle tri(h, r);
        for (unsigned n = 0; n <= 12; ++n)
            for (unsigned k = 0; k <= n; ++k) CHECK(tri.at(n, k) == gen_stirling(n, k, h, r));
    }
}

TEST_CASE("fault injection hook") {
    combinat_testing::corrupt_stirling2(5, 2);
    CHECK(stirling2(5, 2) == brute_stirling2(5, 2) + 1);
    combinat_testing::clear_corruption();
    CHECK(stirling2(5, 2) == brute_stirling2(5, 2));
}
