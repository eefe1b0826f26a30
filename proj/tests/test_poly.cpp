#include "doctest.h"

#include "meixner/poly.hpp"

#include "test_util.hpp"

using namespace meixner;

namespace {

ExactPoly random_poly(std::mt19937_64& rng, unsigned max_deg) {
    std::uniform_int_distribution<unsigned> d(0, max_deg);
    unsigned deg = d(rng);
    std::vector<GaussRational> c(deg + 1);
    for (auto& x : c) x = testutil::random_gauss(rng);
    return ExactPoly(Basis::Monomial, std::move(c));
}

}  // namespace

TEST_CASE("polynomial ring laws") {
    auto rng = testutil::make_rng(211);
    for (int trial = 0; trial < 25; ++trial) {
        ExactPoly p = random_poly(rng, 6), q = random_poly(rng, 6), r = random_poly(rng, 4);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        GaussRational z = testutil::random_gauss(rng);
        CHECK(eval(p * q, z) == eval(p, z) * eval(q, z));
        CHECK(eval(p + q, z) == eval(p, z) + eval(q, z));
    }
}

TEST_CASE("argument shift is evaluation at the shifted point") {
    auto rng = testutil::make_rng(223);
    for (int trial = 0; trial < 20; ++trial) {
        ExactPoly p = random_poly(rng, 7);
        GaussRational c = testutil::random_gauss(rng);
        GaussRational z = testutil::random_gauss(rng);
        CHECK(eval(shift_arg(p, c), z) == eval(p, z + c));
        CHECK(shift_arg(shift_arg(p, c), -c) == p);
    }
}

TEST_CASE("h-derivative lowers generalized factorials and degenerates to D") {
    auto rng = testutil::make_rng(227);
    GaussRational h = testutil::random_nonzero_gauss(rng);
    for (unsigned n = 1; n <= 7; ++n) {
        ExactPoly fb = genfact_poly(GaussRational{0}, h, n);
        CHECK(h_derivative(fb, h) ==
              GaussRational{Rat(n)} * genfact_poly(GaussRational{0}, h, n - 1));
    }
    ExactPoly p = random_poly(rng, 6);
    CHECK(h_derivative(p, GaussRational{0}) == derivative(p));
}

TEST_CASE("zero polynomial and trimming invariants") {
    ExactPoly z = ExactPoly::zero();
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    ExactPoly p(Basis::Monomial, {GaussRational{1}, GaussRational{0}, GaussRational{0}});
    CHECK(p.degree() == 0);
    CHECK((p - p).is_zero());
    CHECK((GaussRational{0} * p).is_zero());
    // basis mismatch is an error
    CHECK_THROWS_AS(p + ExactPoly::unit(1, Basis::Sheffer), std::invalid_argument);
    CHECK_THROWS_AS(eval(ExactPoly::unit(1, Basis::Sheffer), GaussRational{1}),
                    std::invalid_argument);
}
