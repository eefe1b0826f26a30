#include "doctest.h"

#include <vector>

#include "meixner/params.hpp"
#include "meixner/poly.hpp"
#include "meixner/sheffer.hpp"

#include "test_util.hpp"

using namespace meixner;

namespace {

std::vector<MeixnerParams> reference_classes() {
    return {laguerre_ref(), meixner1_ref(), meixner2_ref()};
}

ExactPoly random_poly(std::mt19937_64& rng, Basis b, unsigned deg) {
    std::vector<GaussRational> c(deg + 1);
    for (auto& x : c) x = testutil::random_gauss(rng);
    c[deg] = testutil::random_nonzero_gauss(rng);
    return ExactPoly(b, std::move(c));
}

}  // namespace

TEST_CASE("validate_params derives the class constants") {
    auto lag = laguerre_ref();
    CHECK(lag.lambda == GaussRational{2});
    CHECK(lag.eta == GaussRational{1});
    CHECK(lag.ell == GaussRational{1});

    auto m1 = meixner1_ref();
    CHECK(m1.lambda == GaussRational{3});
    CHECK(m1.eta == GaussRational{2});
    CHECK(m1.ell == GaussRational{1});

    auto m2 = meixner2_ref();
    CHECK(m2.lambda == GaussRational{2});
    CHECK(m2.eta == GaussRational{2});
    CHECK(m2.ell == GaussRational{0});
}

TEST_CASE("validate_params rejects out-of-class parameters") {
    CHECK_THROWS_AS(validate_params(GaussRational{1}, GaussRational{1}, Rat(0),
                                    ShefferClass::Laguerre),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_params(GaussRational{1}, GaussRational{2}, Rat(1),
                                    ShefferClass::Laguerre),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_params(GaussRational{1}, GaussRational{2}, Rat(1),
                                    ShefferClass::MeixnerFirst),
                    std::invalid_argument);
    // Im(alpha) = 0 is not a Meixner-2 parameter set
    CHECK_THROWS_AS(validate_params(GaussRational{1}, GaussRational{1}, Rat(1),
                                    ShefferClass::MeixnerSecond),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_params(GaussRational{1, 1}, GaussRational{1, 1}, Rat(1),
                                    ShefferClass::MeixnerSecond),
                    std::invalid_argument);
}

TEST_CASE("sheffer_poly base cases") {
    for (const auto& P : reference_classes()) {
        CHECK(sheffer_poly(P, 0) == ExactPoly::constant(GaussRational{1}));
        ExactPoly s1 = sheffer_poly(P, 1);
        CHECK(s1 == ExactPoly(Basis::Monomial, {-P.ell, GaussRational{1}}));
    }
    // two recurrence steps by hand: s_2 = (x-3)(x-1) - 1 = x^2 - 4x + 2
    ExactPoly s2 = sheffer_poly(laguerre_ref(), 2);
    CHECK(s2 == ExactPoly(Basis::Monomial,
                          {GaussRational{2}, GaussRational{-4}, GaussRational{1}}));
}

TEST_CASE("recurrence self-consistency") {
    for (const auto& P : reference_classes()) {
        for (unsigned n = 0; n <= 10; ++n) {
            ExactPoly sn = sheffer_poly(P, n);
            ExactPoly snp = sheffer_poly(P, n + 1);
            ExactPoly snm = (n == 0) ? ExactPoly::zero() : sheffer_poly(P, n - 1);
            GaussRational bn = P.lambda * GaussRational{Rat(n)} + P.ell;
            GaussRational cn = P.sigma_g() * GaussRational{Rat(n)} +
                               P.eta * GaussRational{Rat(n) * Rat(n > 0 ? n - 1 : 0)};
            ExactPoly residual = mul_z(sn) - snp - bn * sn - cn * snm;
            CHECK(residual.is_zero());
        }
    }
}

TEST_CASE("ladder operators") {
    auto P = meixner1_ref();
    CHECK(lower(ExactPoly::unit(0, Basis::Sheffer)).is_zero());
    CHECK(lower(ExactPoly::unit(3, Basis::Sheffer)) ==
          GaussRational{3} * ExactPoly::unit(2, Basis::Sheffer));
    CHECK(raise_op(ExactPoly::unit(2, Basis::Sheffer)) == ExactPoly::unit(3, Basis::Sheffer));

    CHECK(annihilator(P, ExactPoly::unit(0, Basis::Sheffer)).is_zero());
    CHECK(annihilator(P, ExactPoly::unit(1, Basis::Sheffer)) ==
          P.sigma_g() * ExactPoly::unit(0, Basis::Sheffer));
    GaussRational two_se = GaussRational{2} * (P.sigma_g() + P.eta);
    CHECK(annihilator(P, ExactPoly::unit(2, Basis::Sheffer)) ==
          two_se * ExactPoly::unit(1, Basis::Sheffer));
}

TEST_CASE("ladder commutator [d-, d+] = 1") {
    auto rng = testutil::make_rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        ExactPoly p = random_poly(rng, Basis::Sheffer, 8);
        ExactPoly commutator = lower(raise_op(p)) - raise_op(lower(p));
        CHECK(commutator == p);
    }
}

TEST_CASE("basis conversion examples") {
    auto P = laguerre_ref();
    CHECK(to_sheffer(P, ExactPoly::constant(GaussRational{1})) ==
          ExactPoly::unit(0, Basis::Sheffer));
    // x = s_1 + l
    CHECK(to_sheffer(P, ExactPoly::unit(1, Basis::Monomial)) ==
          ExactPoly(Basis::Sheffer, {P.ell, GaussRational{1}}));
}

TEST_CASE("basis conversion round-trips") {
    auto rng = testutil::make_rng(37);
    for (const auto& P : reference_classes()) {
        for (int trial = 0; trial < 5; ++trial) {
            ExactPoly p = random_poly(rng, Basis::Monomial, 6);
            CHECK(to_monomial(P, to_sheffer(P, p)) == p);
            CHECK(to_monomial(P, to_falling_beta(P, p)) == p);
            ExactPoly s = random_poly(rng, Basis::Sheffer, 6);
            CHECK(to_sheffer(P, to_falling_beta(P, s)) == s);
        }
    }
}

TEST_CASE("closed-form conversion equals triangular solve") {
    auto rng = testutil::make_rng(41);
    for (const auto& P : reference_classes()) {
        for (unsigned n = 0; n <= 8; ++n)
            CHECK(to_sheffer(P, ExactPoly::unit(n, Basis::Monomial)) ==
                  to_sheffer_by_solve(P, ExactPoly::unit(n, Basis::Monomial)));
        for (int trial = 0; trial < 4; ++trial) {
            ExactPoly p = random_poly(rng, Basis::Monomial, 8);
            CHECK(to_sheffer(P, p) == to_sheffer_by_solve(P, p));
        }
    }
}

TEST_CASE("sheffer basis expansion matches the recurrence route") {
    auto rng = testutil::make_rng(43);
    for (const auto& P : reference_classes()) {
        for (int trial = 0; trial < 4; ++trial) {
            ExactPoly s = random_poly(rng, Basis::Sheffer, 7);
            CHECK(to_monomial(P, s) == sheffer_to_monomial_by_recurrence(P, s));
        }
    }
}

TEST_CASE("closed-form expansion of p_n matches the shifted recurrence") {
    for (const auto& P : reference_classes()) {
        for (unsigned n = 0; n <= 8; ++n) {
            ExactPoly closed(Basis::Monomial, detail::p_in_monomial(P, n));
            CHECK(closed == shifted_sheffer_poly(P, n));
        }
    }
}

TEST_CASE("monomial expansion in p-basis inverts the closed form") {
    for (const auto& P : reference_classes()) {
        for (unsigned m = 0; m <= 8; ++m) {
            auto c = detail::monomial_in_p(P, m);
            ExactPoly acc = ExactPoly::zero();
            for (unsigned i = 0; i < c.size(); ++i)
                acc = acc + c[i] * shifted_sheffer_poly(P, i);
            CHECK(acc == ExactPoly::unit(m, Basis::Monomial));
        }
    }
}

TEST_CASE("falling-beta expansions against direct products") {
    auto rng = testutil::make_rng(47);
    for (int trial = 0; trial < 6; ++trial) {
        GaussRational beta = testutil::random_nonzero_gauss(rng);
        for (unsigned n = 0; n <= 7; ++n) {
            ExactPoly unit_fb = ExactPoly::unit(n, Basis::FallingBeta);
            CHECK(falling_to_monomial(unit_fb, beta) == genfact_poly(GaussRational{0}, beta, n));
            CHECK(monomial_to_falling(falling_to_monomial(unit_fb, beta), beta) == unit_fb);
        }
    }
}

TEST_CASE("difference coefficients recover falling-beta expansions") {
    GaussRational beta{Rat(2, 3)};

    SUBCASE("constant") {
        std::vector<GaussRational> ones(8, GaussRational{1});
        CHECK(series_coefficients_by_difference(ones, beta, 0) == GaussRational{1});
        for (unsigned n = 1; n <= 6; ++n)
            CHECK(series_coefficients_by_difference(ones, beta, n) == GaussRational{0});
    }

    SUBCASE("low-degree falling factorials") {
        auto sample = [&](unsigned deg, unsigned k) {
            // (beta k | beta)_deg
            return genfact(GaussRational{Rat(k)} * beta, beta, deg);
        };
        std::vector<GaussRational> v1, v2;
        for (unsigned k = 0; k <= 4; ++k) {
            v1.push_back(sample(1, k));
            v2.push_back(sample(2, k));
        }
        CHECK(series_coefficients_by_difference(v1, beta, 1) == GaussRational{1});
        CHECK(series_coefficients_by_difference(v2, beta, 2) == GaussRational{1});
        CHECK(series_coefficients_by_difference(v2, beta, 0) == GaussRational{0});
        CHECK(series_coefficients_by_difference(v2, beta, 1) == GaussRational{0});
    }

    SUBCASE("random expansion recovery") {
        auto rng = testutil::make_rng(53);
        std::vector<GaussRational> coeffs(6);
        for (auto& c : coeffs) c = testutil::random_gauss(rng);
        ExactPoly f(Basis::FallingBeta, coeffs);
        ExactPoly mono = falling_to_monomial(f, beta);
        std::vector<GaussRational> samples;
        for (unsigned k = 0; k <= 8; ++k)
            samples.push_back(eval(mono, GaussRational{Rat(k)} * beta));
        for (unsigned n = 0; n <= 7; ++n)
            CHECK(series_coefficients_by_difference(samples, beta, n) == f.coeff(n));
    }

    SUBCASE("beta must be nonzero") {
        std::vector<GaussRational> v(3, GaussRational{1});
        CHECK_THROWS_AS(series_coefficients_by_difference(v, GaussRational{0}, 1),
                        std::domain_error);
    }
}
