#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "meixner/meixner.hpp"

namespace meixner {

/// One verification result. For exact checks tol is 0 and the error fields
/// are 0/absent; pass means exact equality over every instance of the
/// identity.
struct ReportRow {
    std::string id;
    std::string inputs;
    std::string expected;
    std::string actual;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string fmt_cplx(Cplx v) {
    return fmt_double(v.real()) + (v.imag() < 0 ? "" : "+") + fmt_double(v.imag()) + "i";
}

namespace verify_detail {

inline GaussRational rand_gauss(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return {Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
}

inline std::vector<MeixnerParams> classes() {
    return {laguerre_ref(), meixner1_ref(), meixner2_ref()};
}

inline std::vector<double> support_points(const NumericParams& np) {
    if (np.cls == ShefferClass::MeixnerFirst) {
        double step = (np.alpha - np.beta).real();
        return {0.0, step, 2.0 * step};
    }
    if (np.cls == ShefferClass::Laguerre) return {0.5, 1.0, 2.0};
    return {-1.0, 0.0, 1.5};
}

/// Builds an exact-identity row: `fails` lists the first offending instance.
inline ReportRow exact_row(const std::string& id, const std::string& inputs, unsigned cases,
                           const std::string& first_failure) {
    ReportRow r;
    r.id = id;
    r.inputs = inputs;
    r.expected = "exact identity";
    r.pass = first_failure.empty();
    r.actual = r.pass ? ("ok (" + std::to_string(cases) + " cases)") : first_failure;
    return r;
}

/// Numeric row carrying the worst relative error over the checked grid.
inline ReportRow numeric_row(const std::string& id, const std::string& inputs, double worst_rel,
                             double tol, const std::string& detail = "") {
    ReportRow r;
    r.id = id;
    r.inputs = inputs;
    r.expected = "rel err <= " + fmt_double(tol);
    r.actual = "worst rel err " + fmt_double(worst_rel) + (detail.empty() ? "" : " " + detail);
    r.rel_err = worst_rel;
    r.abs_err = worst_rel;
    r.tol = tol;
    r.pass = worst_rel <= tol;
    return r;
}

inline double worst(double acc, Cplx got, Cplx want, double abs_floor = 1e-12) {
    double scale = std::max(std::abs(want), abs_floor / std::max(abs_floor, 1.0));
    double err = std::abs(got - want) / std::max(scale, abs_floor);
    return std::max(acc, err);
}

}  // namespace verify_detail

// ---------------------------------------------------------------------------
// Exact suite
// ---------------------------------------------------------------------------

inline ReportRow check_stirling_orthogonality() {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (unsigned n = 1; n <= 12 && fail.empty(); ++n) {
        for (unsigned i = 1; i <= n && fail.empty(); ++i) {
            Int s1 = 0, s2 = 0;
            for (unsigned k = i; k <= n; ++k) {
                s1 += stirling2(n, k) * stirling1(k, i);
                s2 += stirling1(n, k) * stirling2(k, i);
            }
            Int expect = (n == i) ? 1 : 0;
            ++cases;
            if (s1 != expect || s2 != expect)
                fail = "stirling orthogonality broken at (n=" + std::to_string(n) +
                       ", i=" + std::to_string(i) + "): got " + s1.str() + ", " + s2.str();
        }
    }
    return exact_row("exact/stirling-orthogonality", "n<=12", cases, fail);
}

inline ReportRow check_lah_identity() {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (unsigned n = 1; n <= 10 && fail.empty(); ++n) {
        ExactPoly falling = genfact_poly(GaussRational{0}, GaussRational{1}, n);
        ExactPoly sum = ExactPoly::zero();
        for (unsigned k = 1; k <= n; ++k) {
            GaussRational c{Rat(lah(n, k))};
            if ((n - k) % 2 == 1) c = -c;
            sum = sum + c * genfact_poly(GaussRational{0}, GaussRational{-1}, k);
        }
        ++cases;
        if (!(falling == sum)) fail = "lah expansion broken at n=" + std::to_string(n);
    }
    return exact_row("exact/lah-expansion", "n<=10", cases, fail);
}

inline ReportRow check_gen_stirling_expansion(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (int trial = 0; trial < 6 && fail.empty(); ++trial) {
        GaussRational h = rand_gauss(rng);
        GaussRational r = rand_gauss(rng);
        for (unsigned n = 0; n <= 8 && fail.empty(); ++n) {
            ExactPoly lhs = ExactPoly::zero();
            for (unsigned k = 0; k <= n; ++k)
                lhs = lhs + gen_stirling(n, k, h, r) * genfact_poly(GaussRational{0}, -h, k);
            ++cases;
            if (!(lhs == genfact_poly(r, h, n)))
                fail = "generalized-Stirling expansion broken at n=" + std::to_string(n);
        }
    }
    return exact_row("exact/gen-stirling-expansion", "n<=8, random (h,r)", cases, fail);
}

inline ReportRow check_genfact_binomial(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (int trial = 0; trial < 6 && fail.empty(); ++trial) {
        GaussRational z = rand_gauss(rng), w = rand_gauss(rng), h = rand_gauss(rng);
        for (unsigned n = 0; n <= 8 && fail.empty(); ++n) {
            GaussRational sum{0};
            for (unsigned k = 0; k <= n; ++k)
                sum += GaussRational{Rat(binomial(n, k))} * genfact(z, h, k) *
                       genfact(w, h, n - k);
            ++cases;
            if (!(sum == genfact(z + w, h, n)))
                fail = "genfact binomial identity broken at n=" + std::to_string(n);
        }
    }
    return exact_row("exact/genfact-binomial", "n<=8, random (z,w,h)", cases, fail);
}

inline ReportRow check_recurrence_consistency() {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (const auto& P : classes()) {
        for (unsigned n = 0; n <= 10 && fail.empty(); ++n) {
            ExactPoly sn = sheffer_poly(P, n);
            ExactPoly snp = sheffer_poly(P, n + 1);
            ExactPoly snm = (n == 0) ? ExactPoly::zero() : sheffer_poly(P, n - 1);
            GaussRational bn = P.lambda * GaussRational{Rat(n)} + P.ell;
            GaussRational cn = P.sigma_g() * GaussRational{Rat(n)} +
                               P.eta * GaussRational{Rat(n) * Rat(n > 0 ? n - 1 : 0)};
            ++cases;
            if (!(mul_z(sn) - snp - bn * sn - cn * snm).is_zero())
                fail = std::string("recurrence self-consistency broken for ") +
                       class_name(P.cls) + " at n=" + std::to_string(n);
        }
    }
    return exact_row("exact/sheffer-recurrence", "n<=10, 3 classes", cases, fail);
}

inline ReportRow check_ladder_commutator(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (int trial = 0; trial < 8 && fail.empty(); ++trial) {
        std::vector<GaussRational> c(9);
        for (auto& x : c) x = rand_gauss(rng);
        ExactPoly p(Basis::Sheffer, c);
        ++cases;
        if (!(lower(raise_op(p)) - raise_op(lower(p)) == p))
            fail = "ladder commutator broken on a random degree-8 polynomial";
    }
    return exact_row("exact/ladder-commutator", "deg<=8, random", cases, fail);
}

inline ReportRow check_conversion_vs_solve(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (const auto& P : classes()) {
        for (unsigned n = 0; n <= 8 && fail.empty(); ++n) {
            ++cases;
            if (!(to_sheffer(P, ExactPoly::unit(n, Basis::Monomial)) ==
                  to_sheffer_by_solve(P, ExactPoly::unit(n, Basis::Monomial))))
                fail = std::string("conversion mismatch for ") + class_name(P.cls) +
                       " at z^" + std::to_string(n);
        }
        for (int trial = 0; trial < 3 && fail.empty(); ++trial) {
            std::vector<GaussRational> c(9);
            for (auto& x : c) x = rand_gauss(rng);
            ExactPoly p(Basis::Monomial, c);
            ++cases;
            if (!(to_sheffer(P, p) == to_sheffer_by_solve(P, p)))
                fail = std::string("conversion mismatch on random polynomial for ") +
                       class_name(P.cls);
        }
    }
    return exact_row("exact/basis-conversion-vs-solve", "n<=8, 3 classes", cases, fail);
}

inline ReportRow check_expansion_closed_forms() {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (const auto& P : classes()) {
        for (unsigned n = 0; n <= 8 && fail.empty(); ++n) {
            // display 2: p_n in monomials equals the shifted recurrence
            ExactPoly closed(Basis::Monomial, detail::p_in_monomial(P, n));
            ++cases;
            if (!(closed == shifted_sheffer_poly(P, n))) {
                fail = std::string("p_n expansion broken for ") + class_name(P.cls) +
                       " at n=" + std::to_string(n);
                break;
            }
            // display 1: z^n reconstructed from the p-basis coefficients
            auto c = detail::monomial_in_p(P, n);
            ExactPoly acc = ExactPoly::zero();
            for (unsigned i = 0; i < c.size(); ++i)
                acc = acc + c[i] * shifted_sheffer_poly(P, i);
            ++cases;
            if (!(acc == ExactPoly::unit(n, Basis::Monomial)))
                fail = std::string("z^n expansion broken for ") + class_name(P.cls) +
                       " at n=" + std::to_string(n);
        }
    }
    return exact_row("exact/expansion-closed-forms", "both displays, n<=8, 3 classes", cases, fail);
}

inline ReportRow check_normal_order_closed_form(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (int trial = 0; trial < 20 && fail.empty(); ++trial) {
        GaussRational a = rand_gauss(rng), b = rand_gauss(rng);
        for (unsigned n = 1; n <= 8 && fail.empty(); ++n) {
            ExprPtr e = OperatorExpr::power(
                OperatorExpr::product({OperatorExpr::u(), OperatorExpr::v()}), n);
            ++cases;
            if (!(uv_power_closed_form(n, a, b) == normal_order(*e, a, b)))
                fail = "(UV)^n closed form disagrees with rewriting at n=" + std::to_string(n);
        }
    }
    return exact_row("exact/normal-order-closed-form", "n<=8, 20 random (a,b)", cases, fail);
}

inline ReportRow check_vn_u_relation(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (int trial = 0; trial < 20 && fail.empty(); ++trial) {
        GaussRational a = rand_gauss(rng), b = rand_gauss(rng);
        for (unsigned n = 1; n <= 10 && fail.empty(); ++n) {
            ++cases;
            if (!vn_u_relation_check(n, a, b))
                fail = "V^n U relation broken at n=" + std::to_string(n);
        }
    }
    return exact_row("exact/vn-u-relation", "n<=10, 20 random (a,b)", cases, fail);
}

inline ReportRow check_rewriting_confluence(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    std::uniform_int_distribution<int> len_dist(1, 10);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 10 && fail.empty(); ++trial) {
        std::string word;
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i) word += bit(rng) ? 'U' : 'V';
        GaussRational a = rand_gauss(rng), b = rand_gauss(rng);
        detail::WordSum ws{{word, GaussRational{1}}};
        NormalForm reference = normal_order_words(ws, a, b);
        for (int s = 0; s < 4 && fail.empty(); ++s) {
            std::mt19937_64 srng(rng());
            RewriteStrategy strat = [&srng](const std::string&,
                                            const std::vector<std::size_t>& pos) {
                return std::uniform_int_distribution<std::size_t>(0, pos.size() - 1)(srng);
            };
            ++cases;
            if (!(normal_order_words(ws, a, b, strat) == reference))
                fail = "rewriting not confluent on word " + word;
        }
    }
    return exact_row("exact/rewriting-confluence", "words len<=10, random strategies", cases,
                     fail);
}

inline ReportRow check_concrete_representation(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    std::uniform_int_distribution<int> len_dist(1, 6);
    std::uniform_int_distribution<int> bit(0, 1);
    for (const auto& P : classes()) {
        for (int trial = 0; trial < 4 && fail.empty(); ++trial) {
            std::string word;
            int len = len_dist(rng);
            for (int i = 0; i < len; ++i) word += bit(rng) ? 'U' : 'V';
            NormalForm nf =
                normal_order_words({{word, GaussRational{1}}}, P.beta, P.alpha - P.beta);
            for (unsigned m = 0; m <= 6 && fail.empty(); m += 2) {
                ExactPoly sm = ExactPoly::unit(m, Basis::Sheffer);
                ++cases;
                if (!(apply_word(P, word, sm) == apply_normal_form(P, nf, sm)))
                    fail = std::string("representation mismatch for ") + class_name(P.cls) +
                           " on word " + word;
            }
        }
    }
    return exact_row("exact/concrete-representation", "words len<=6 on s_m, m<=6", cases, fail);
}

inline ReportRow check_factorization(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (const auto& P : classes()) {
        GaussRational h = P.beta - P.alpha;
        auto one_minus_aD = [&](const ExactPoly& p) { return p - P.alpha * h_derivative(p, h); };
        for (int trial = 0; trial < 4 && fail.empty(); ++trial) {
            std::vector<GaussRational> c(9);
            for (auto& x : c) x = rand_gauss(rng);
            ExactPoly p(Basis::Monomial, c);
            if (p.is_zero()) continue;
            ExactPoly u_route = to_monomial(
                P, apply_concrete({ConcreteOp::Tag::RawU, P, {}}, to_sheffer(P, p)));
            ExactPoly factored = mul_z(one_minus_aD(p));
            if (P.cls == ShefferClass::MeixnerSecond)
                factored = factored + P.sigma_over_alpha() * one_minus_aD(p);
            auto v_route = [&](const ExactPoly& q) {
                return to_monomial(
                    P, apply_concrete({ConcreteOp::Tag::RawV, P, {}}, to_sheffer(P, q)));
            };
            cases += 3;
            if (!(u_route == factored) || !(v_route(one_minus_aD(p)) == p) ||
                !(one_minus_aD(v_route(p)) == p))
                fail = std::string("factorization identity broken for ") + class_name(P.cls);
        }
    }
    return exact_row("exact/factorization", "deg<=8, 3 classes", cases, fail);
}

inline ReportRow check_conjugation(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (const auto& P : classes()) {
        for (int trial = 0; trial < 4 && fail.empty(); ++trial) {
            std::vector<GaussRational> c(9);
            for (auto& x : c) x = rand_gauss(rng);
            ExactPoly p(Basis::Monomial, c);
            ExactPoly in_fb = script_i_inverse(P, p);
            ExactPoly as_fn = falling_to_monomial(in_fb, P.beta);
            ExactPoly r_applied = apply_concrete({ConcreteOp::Tag::ScriptR, P, {}}, as_fn);
            ExactPoly back = script_i(P, monomial_to_falling(r_applied, P.beta));
            ++cases;
            if (!(back == mul_z(p)))
                fail = std::string("conjugation Z = I R I^-1 broken for ") + class_name(P.cls);
        }
    }
    return exact_row("exact/conjugation", "deg<=8, 3 classes", cases, fail);
}

inline ReportRow check_rho_transfer(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (const auto& P : classes()) {
        for (int trial = 0; trial < 4 && fail.empty(); ++trial) {
            std::vector<GaussRational> c(9);
            for (auto& x : c) x = rand_gauss(rng);
            ExactPoly f(Basis::Monomial, c);
            ExactPoly rf = apply_concrete({ConcreteOp::Tag::Rho, P, {}}, f);
            if (P.cls == ShefferClass::MeixnerSecond) rf = rf - P.sigma_over_alpha() * f;
            ExactPoly lhs = to_monomial(P, ExactPoly(Basis::Sheffer, rf.coeffs));
            ExactPoly rhs = mul_z(to_monomial(P, ExactPoly(Basis::Sheffer, f.coeffs)));
            ++cases;
            if (!(lhs == rhs))
                fail = std::string("rho transfer broken for ") + class_name(P.cls);
        }
    }
    return exact_row("exact/rho-transfer", "deg<=8, 3 classes", cases, fail);
}

inline ReportRow check_script_r_closed_form() {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (const auto& P : classes()) {
        ExactPoly iterate = ExactPoly::constant(GaussRational{1});
        for (unsigned n = 1; n <= 8 && fail.empty(); ++n) {
            iterate = apply_concrete({ConcreteOp::Tag::ScriptR, P, {}}, iterate);
            ++cases;
            if (!(script_r_on_one(P, n) == iterate))
                fail = std::string("R^n 1 closed form broken for ") + class_name(P.cls) +
                       " at n=" + std::to_string(n);
        }
    }
    return exact_row("exact/script-r-closed-form", "n<=8, 3 classes", cases, fail);
}

inline ReportRow check_composition(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (const auto& P : classes()) {
        for (unsigned deg = 0; deg <= 6 && fail.empty(); ++deg) {
            std::vector<GaussRational> c(deg + 1);
            for (auto& x : c) x = rand_gauss(rng);
            ExactPoly f(Basis::Sheffer, c);
            ExactPoly g_mono = falling_to_monomial(ExactPoly(Basis::FallingBeta, f.coeffs),
                                                   P.beta);
            std::vector<GaussRational> samples;
            for (unsigned k = 0; k <= deg + 2; ++k)
                samples.push_back(eval(g_mono, GaussRational{Rat(k)} * P.beta));
            for (unsigned n = 0; n <= deg + 2 && fail.empty(); ++n) {
                ++cases;
                if (!(series_coefficients_by_difference(samples, P.beta, n) == f.coeff(n)))
                    fail = std::string("S = T curly-S broken for ") + class_name(P.cls) +
                           " at coefficient " + std::to_string(n);
            }
        }
    }
    return exact_row("exact/composition-S-T-curlyS", "deg<=6, 3 classes", cases, fail);
}

inline ReportRow check_annihilator_eigen(std::mt19937_64& rng) {
    using namespace verify_detail;
    unsigned cases = 0;
    std::string fail;
    for (const auto& P : classes()) {
        for (unsigned N = 1; N <= 5 && fail.empty(); ++N) {
            ++cases;
            if (!annihilator_eigen_check(P, rand_gauss(rng), N))
                fail = std::string("A- E_N = z E_{N-1} broken for ") + class_name(P.cls) +
                       " at N=" + std::to_string(N);
        }
    }
    return exact_row("exact/annihilator-eigen", "N<=5, random rational z", cases, fail);
}

// ---------------------------------------------------------------------------
// Numeric suite
// ---------------------------------------------------------------------------

inline ReportRow check_gamma_function() {
    using namespace verify_detail;
    using std::numbers::pi;
    double w = 0.0;
    w = worst(w, complex_gamma({5.0, 0.0}), 24.0);
    w = worst(w, complex_gamma({0.5, 0.0}), std::sqrt(pi));
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> re(-8.0, 12.0), im(0.1, 10.0);
    for (int trial = 0; trial < 25; ++trial) {
        Cplx z{re(rng), im(rng)};
        if (is_nonpositive_integer(z)) continue;
        w = worst(w, std::conj(complex_gamma(z)), complex_gamma(std::conj(z)));
    }
    return numeric_row("numeric/gamma-function", "values + conjugation grid", w, 1e-12);
}

inline ReportRow check_bessel_dual_path() {
    using namespace verify_detail;
    using std::numbers::pi;
    double w = 0.0;
    w = worst(w, bessel_k(0.5, 1.0), std::sqrt(pi / 2.0) * std::exp(-1.0));
    w = worst(w, bessel_k(1.0, 2.0), bessel_k_series(1.0, 2.0));
    for (double theta : {0.25, 1.5, 2.75})
        for (double x : {0.5, 1.5, 4.0}) w = worst(w, bessel_k(theta, x), bessel_k_series(theta, x));
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> th(-3.0, 3.0), xs(0.2, 8.0);
    for (int t = 0; t < 10; ++t) {
        double theta = th(rng), x = xs(rng);
        w = worst(w, bessel_k(theta, x), bessel_k(-theta, x));
    }
    return numeric_row("numeric/bessel-k", "half-integer value, symmetry, dual path", w, 1e-9);
}

inline ReportRow check_moment_oracle() {
    using namespace verify_detail;
    double w_std = 0.0, w_m2 = 0.0;
    for (const auto& P : classes()) {
        NumericParams np = to_numeric(P);
        bool m2 = (P.cls == ShefferClass::MeixnerSecond);
        unsigned nmax = m2 ? 6 : 8;
        for (unsigned n = 0; n <= nmax; ++n) {
            Cplx shift = m2 ? np.sigma_over_alpha() : Cplx(0.0);
            Cplx numeric = integrate(measure_of(np), [&](double x) {
                return pow_int(Cplx(x) + shift, n);
            });
            Cplx exact = moments(P, n).to_complex();
            double& w = m2 ? w_m2 : w_std;
            w = worst(w, numeric, exact);
        }
    }
    double w = std::max(w_std, w_m2 * 1e-2);  // scale M2 to its looser tolerance
    ReportRow r = numeric_row("numeric/moment-oracle", "n<=8 (6 for meixner2)", w, 1e-8,
                              "(meixner2 worst " + fmt_double(w_m2) + " vs 1e-6)");
    r.pass = w_std <= 1e-8 && w_m2 <= 1e-6;
    return r;
}

inline ReportRow check_falling_moment() {
    using namespace verify_detail;
    double w = 0.0;
    for (const auto& P : classes()) {
        NumericParams np = to_numeric(P);
        Cplx ab = np.alpha - np.beta;
        Cplx shift =
            (P.cls == ShefferClass::MeixnerSecond) ? np.sigma_over_alpha() : Cplx(0.0);
        for (unsigned n = 0; n <= 6; ++n) {
            Cplx numeric = integrate(measure_of(np), [&](double x) {
                return genfact_num(Cplx(x) + shift, ab, n);
            });
            w = worst(w, numeric, falling_alpha_beta_moment(P, n).to_complex());
        }
    }
    return numeric_row("numeric/falling-moment", "n<=6, 3 classes", w, 1e-8);
}

inline ReportRow check_complex_parameter_consistency() {
    using namespace verify_detail;
    double w = 0.0;
    double sigma = 1.75;
    MeasureSpec g_real = gamma_measure(1.0, sigma);
    MeasureSpec g_cplx = gamma_measure(1.0, {sigma, 0.0});
    for (double x : {0.2, 1.0, 3.7}) w = worst(w, density(g_cplx, x), density(g_real, x));
    MeasureSpec m_real = meixner_measure({1.0, 1.0}, sigma);
    MeasureSpec m_cplx = meixner_measure({1.0, 1.0}, {sigma, 0.0});
    for (double x : {-2.0, 0.0, 1.5}) w = worst(w, density(m_cplx, x), density(m_real, x));
    MeasureSpec nb_real = negbinomial_measure(2.0, 1.0, sigma);
    MeasureSpec nb_cplx = negbinomial_measure(2.0, 1.0, {sigma, 0.0});
    for (double x : {0.0, 1.0, 4.0}) w = worst(w, density(nb_cplx, x), density(nb_real, x));
    return numeric_row("numeric/complex-parameter-consistency", "real zeta through complex path",
                       w, 1e-12);
}

inline ReportRow check_poisson_identity() {
    using namespace verify_detail;
    double w = 0.0;
    std::vector<Cplx> zetas{{3.0, 1.0}, {0.5, 0.0}, {-2.0, 0.0}, {-1.0, 2.0}, {4.0, -3.0}};
    for (Cplx zeta : zetas)
        for (unsigned n = 0; n <= 8; ++n) {
            Cplx got =
                poisson_expect(zeta, [n](unsigned k) { return genfact_num(double(k), 1.0, n); });
            Cplx want = (n == 0) ? Cplx(1.0) : std::pow(zeta, double(n));
            w = worst(w, got, want);
        }
    return numeric_row("numeric/poisson-falling-identity", "n<=8, complex/negative zeta grid", w,
                       1e-10);
}

inline ReportRow check_orthogonality() {
    using namespace verify_detail;
    double w_std = 0.0, w_m2 = 0.0;
    for (const auto& P : classes()) {
        bool m2 = (P.cls == ShefferClass::MeixnerSecond);
        for (unsigned m = 0; m <= 5; ++m)
            for (unsigned n = m; n <= 5; ++n) {
                auto r = orthogonality_check(P, m, n);
                double scale = std::abs(sheffer_norm_sq(P, std::max(m, n)).to_complex());
                double err = std::abs(r.value - r.expected.to_complex()) / std::max(1.0, scale);
                (m2 ? w_m2 : w_std) = std::max(m2 ? w_m2 : w_std, err);
            }
    }
    ReportRow r = numeric_row("numeric/orthogonality", "m,n<=5, 3 reference classes",
                              std::max(w_std, w_m2 * 1e-1), 1e-6,
                              "(meixner2 worst " + fmt_double(w_m2) + " vs 1e-5)");
    r.pass = w_std <= 1e-6 && w_m2 <= 1e-5;
    return r;
}

inline ReportRow check_fock_moments() {
    using namespace verify_detail;
    double w = 0.0;
    for (auto [eta, sigma] :
         std::vector<std::pair<double, double>>{{1.0, 1.0}, {1.0, 2.0}, {2.0, 1.0}})
        for (unsigned n = 0; n <= 5; ++n)
            w = worst(w, fock_radial_moment(eta, sigma, n), fock_weight(eta, sigma, n));
    return numeric_row("numeric/fock-radial-moments", "n<=5, (eta,sigma) in {(1,1),(1,2),(2,1)}",
                       w, 1e-6);
}

inline ReportRow check_fock_density_dual_path() {
    using namespace verify_detail;
    double w = 0.0;
    for (auto [eta, sigma] :
         std::vector<std::pair<double, double>>{{1.0, 1.0}, {1.0, 2.0}, {2.0, 1.0}})
        for (double r : {0.25, 0.5, 1.0, 2.0, 3.0})
            w = worst(w, fock_lambda_density(eta, sigma, r),
                      fock_lambda_density_mixture(eta, sigma, r));
    return numeric_row("numeric/fock-bessel-vs-mixture", "5 radii, 3 parameter pairs", w, 1e-6);
}

inline ReportRow check_mellin() {
    using namespace verify_detail;
    double w = 0.0;
    for (double sigma : {1.0, 2.0})
        for (double r : {0.5, 1.0, 4.0}) {
            auto res = mellin_convolution_check(sigma, r);
            w = worst(w, res.lhs, res.rhs);
        }
    return numeric_row("numeric/mellin-convolution", "sigma in {1,2}, 3 points", w, 1e-6);
}

inline ReportRow check_coherent_dual_path() {
    using namespace verify_detail;
    double w = 0.0;
    std::vector<Cplx> zs{{1.0, 0.0}, {0.5, 0.5}, {-0.7, 0.3}};
    for (const auto& P : classes()) {
        NumericParams np = to_numeric(P);
        for (double x : support_points(np)) {
            if (np.cls == ShefferClass::Laguerre && x <= 0.0) continue;
            for (Cplx z : zs)
                w = worst(w, coherent_E(np, x, z, 1e-10).value,
                          coherent_E_closed(np, x, z).value);
        }
    }
    return numeric_row("numeric/coherent-dual-path", "3x3 (x,z) grid per class", w, 1e-6);
}

inline ReportRow check_curly_s_integral() {
    using namespace verify_detail;
    double w = 0.0;
    for (const auto& P : classes()) {
        NumericParams np = to_numeric(P);
        std::vector<Cplx> zpts;
        if (np.cls == ShefferClass::MeixnerSecond)
            zpts = {0.5 * np.beta, np.beta, 1.5 * np.beta};
        else
            zpts = {{0.4, 0.0}, {1.0, 0.5}, {2.0, -0.3}};
        for (unsigned deg = 0; deg <= 3; ++deg) {
            ExactPoly f = ExactPoly::unit(deg, Basis::Sheffer);
            std::vector<Cplx> fc(deg + 1, 0.0);
            fc[deg] = 1.0;
            for (Cplx z : zpts) {
                Cplx series = transform_curlyS(np, fc, z);
                Cplx integral = transform_curlyS_integral(P, f, z);
                double scale = std::max(1.0, std::abs(genfact_num(z, np.beta, deg)));
                w = std::max(w, std::abs(series - integral) / scale);
            }
        }
    }
    return numeric_row("numeric/curly-s-integral", "s_0..s_3 at 3 in-domain z per class", w,
                       1e-6);
}

inline ReportRow check_transform_t_poisson() {
    using namespace verify_detail;
    double w = 0.0;
    for (const auto& P : classes()) {
        NumericParams np = to_numeric(P);
        std::vector<Cplx> g{0.0, 0.0, 0.0, 1.0};
        Cplx z{2.0, 1.0};
        w = worst(w, transform_T_poisson(np, g, z), std::pow(z, 3.0));
        w = worst(w, transform_T_poisson(np, {0.0, 1.0}, z), z);
        w = worst(w, transform_T_poisson(np, {1.0}, z), 1.0);
    }
    return numeric_row("numeric/transform-t-poisson", "(.|beta)_n at z=2+i, 3 classes", w, 1e-9);
}

inline ReportRow check_rho_vs_transform_s() {
    using namespace verify_detail;
    double w = 0.0;
    for (const auto& P : classes()) {
        NumericParams np = to_numeric(P);
        std::vector<Cplx> zpts;
        if (np.cls == ShefferClass::MeixnerSecond)
            zpts = {np.beta, 2.0 * np.beta};
        else
            zpts = {{1.0, 0.0}, {1.0, 0.5}};
        for (unsigned deg = 0; deg <= 3; ++deg) {
            ExactPoly f = ExactPoly::unit(deg, Basis::Sheffer);
            for (Cplx z : zpts) {
                Cplx want = std::pow(z, double(deg));
                if (deg == 0) want = 1.0;
                Cplx got = rho_expectation(P, f, z);
                w = std::max(w, std::abs(got - want) / std::max(1.0, std::abs(want)));
            }
        }
    }
    return numeric_row("numeric/rho-vs-transform-s", "s_0..s_3, two z per class", w, 1e-6);
}

inline ReportRow check_v_integral(std::mt19937_64& rng) {
    using namespace verify_detail;
    double w = 0.0;
    std::uniform_real_distribution<double> zre(-0.5, 1.5), zim(-0.5, 0.5);
    for (const auto& P : classes()) {
        for (int trial = 0; trial < 2; ++trial) {
            std::vector<GaussRational> c(6);
            for (auto& x : c) x = rand_gauss(rng);
            ExactPoly p(Basis::Monomial, c);
            if (p.is_zero()) continue;
            ExactPoly vp = to_monomial(
                P, apply_concrete({ConcreteOp::Tag::RawV, P, {}}, to_sheffer(P, p)));
            for (int pt = 0; pt < 5; ++pt) {
                Cplx z{zre(rng), zim(rng)};
                Cplx sym = eval(vp, z);
                Cplx num = v_integral_action(P, p, z);
                w = std::max(w, std::abs(num - sym) / std::max(1.0, std::abs(sym)));
            }
        }
    }
    return numeric_row("numeric/v-integral", "deg<=5 random p, 5 points per class", w, 1e-6);
}

inline ReportRow check_isometry(std::mt19937_64& rng) {
    using namespace verify_detail;
    double w = 0.0;
    std::uniform_real_distribution<double> cf(-1.0, 1.0);
    for (const auto& P : classes()) {
        NumericParams np = to_numeric(P);
        std::vector<Cplx> f(6);
        for (auto& c : f) c = {cf(rng), cf(rng)};
        double want = 0.0;
        for (unsigned n = 0; n < f.size(); ++n)
            want += std::norm(f[n]) * fock_weight(np.eta, np.sigma, n);
        Cplx got = integrate(measure_of(np), [&](double x) {
            auto s = sheffer_values(np, 5, x);
            Cplx fx = 0.0;
            for (unsigned n = 0; n < f.size(); ++n) fx += f[n] * s[n];
            return fx * std::conj(fx);
        });
        w = worst(w, got, want);
    }
    return numeric_row("numeric/isometry", "random truncation N<=5, 3 classes", w, 1e-6);
}

inline ReportRow check_kernel(std::mt19937_64& rng) {
    using namespace verify_detail;
    // positivity of the Gram matrix + reproducing property + eta=0 special case
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    double w = 0.0;
    Cplx z{0.6, -0.2}, wpt{1.1, 0.4};
    w = worst(w, fock_kernel(0.0, 2.0, z, wpt, 1e-13).value, std::exp(std::conj(z) * wpt / 2.0));
    bool psd_ok = true;
    for (auto [eta, sigma] : std::vector<std::pair<double, double>>{{1.0, 1.0}, {2.0, 1.0}}) {
        std::vector<Cplx> pts;
        for (int i = 0; i < 5; ++i) pts.push_back({coord(rng), coord(rng)});
        std::vector<std::vector<Cplx>> gram(5, std::vector<Cplx>(5));
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                gram[i][j] = fock_kernel(eta, sigma, pts[i], pts[j], 1e-13).value;
        // Cholesky with a 1e-9 shift certifies PSD up to that shift
        std::size_t n = gram.size();
        std::vector<std::vector<Cplx>> l(n, std::vector<Cplx>(n, 0.0));
        for (std::size_t i = 0; i < n && psd_ok; ++i)
            for (std::size_t j = 0; j <= i && psd_ok; ++j) {
                Cplx sum = gram[i][j] + (i == j ? Cplx(1e-9) : Cplx(0.0));
                for (std::size_t k = 0; k < j; ++k) sum -= l[i][k] * std::conj(l[j][k]);
                if (i == j) {
                    if (sum.real() <= 0.0) psd_ok = false;
                    else l[i][j] = std::sqrt(sum.real());
                } else {
                    l[i][j] = sum / l[j][j].real();
                }
            }
    }
    ReportRow r = numeric_row("numeric/kernel", "eta=0 exponential + gram PSD", w, 1e-10);
    r.pass = r.pass && psd_ok;
    if (!psd_ok) r.actual += " (gram matrix not PSD)";
    return r;
}

// ---------------------------------------------------------------------------
// Slow suite
// ---------------------------------------------------------------------------

/// Monte Carlo sampling of the random measure behind (S f)(z) for the
/// Laguerre reference class at z = 1: xi ~ Poisson(z/beta), then
/// x ~ Gamma(xi + sigma/eta, alpha); the estimator of s_2(x) must land within
/// three standard errors of z^2.
inline ReportRow check_monte_carlo(std::uint64_t seed, std::size_t samples = 1000000) {
    std::mt19937_64 rng(seed);
    double z = 1.0;
    std::poisson_distribution<int> pois(z / 1.0);
    KahanSum sum, sumsq;
    for (std::size_t i = 0; i < samples; ++i) {
        int xi = pois(rng);
        std::gamma_distribution<double> gamma(xi + 1.0, 1.0);
        double x = gamma(rng);
        double s2 = x * x - 4.0 * x + 2.0;
        sum.add(s2);
        sumsq.add(s2 * s2);
    }
    double mean = sum.value() / double(samples);
    double var = sumsq.value() / double(samples) - mean * mean;
    double se = std::sqrt(var / double(samples));
    double dev = std::abs(mean - z * z) / se;
    ReportRow r;
    r.id = "slow/monte-carlo-transform-s";
    r.inputs = "laguerre(1,1,1), z=1, N=" + std::to_string(samples) + ", seed=" +
               std::to_string(seed);
    r.expected = "|mean - 1| <= 3 SE";
    r.actual = "mean " + fmt_double(mean) + ", SE " + fmt_double(se) + ", dev " +
               fmt_double(dev) + " SE";
    r.abs_err = std::abs(mean - 1.0);
    r.rel_err = dev;
    r.tol = 3.0;
    r.pass = dev <= 3.0;
    return r;
}

// ---------------------------------------------------------------------------
// Suite assembly
// ---------------------------------------------------------------------------

struct VerifyOptions {
    bool exact = true;
    bool numeric = true;
    bool slow = false;
    std::uint64_t seed = 12345;
};

inline std::vector<ReportRow> run_verify(const VerifyOptions& opt) {
    std::vector<ReportRow> rows;
    if (opt.exact) {
        std::mt19937_64 rng(opt.seed);
        rows.push_back(check_stirling_orthogonality());
        rows.push_back(check_lah_identity());
        rows.push_back(check_gen_stirling_expansion(rng));
        rows.push_back(check_genfact_binomial(rng));
        rows.push_back(check_recurrence_consistency());
        rows.push_back(check_ladder_commutator(rng));
        rows.push_back(check_conversion_vs_solve(rng));
        rows.push_back(check_expansion_closed_forms());
        rows.push_back(check_normal_order_closed_form(rng));
        rows.push_back(check_vn_u_relation(rng));
        rows.push_back(check_rewriting_confluence(rng));
        rows.push_back(check_concrete_representation(rng));
        rows.push_back(check_factorization(rng));
        rows.push_back(check_conjugation(rng));
        rows.push_back(check_rho_transfer(rng));
        rows.push_back(check_script_r_closed_form());
        rows.push_back(check_composition(rng));
        rows.push_back(check_annihilator_eigen(rng));
    }
    if (opt.numeric) {
        std::mt19937_64 rng(opt.seed + 1);
        rows.push_back(check_gamma_function());
        rows.push_back(check_bessel_dual_path());
        rows.push_back(check_moment_oracle());
        rows.push_back(check_falling_moment());
        rows.push_back(check_complex_parameter_consistency());
        rows.push_back(check_poisson_identity());
        rows.push_back(check_orthogonality());
        rows.push_back(check_fock_moments());
        rows.push_back(check_fock_density_dual_path());
        rows.push_back(check_mellin());
        rows.push_back(check_coherent_dual_path());
        rows.push_back(check_curly_s_integral());
        rows.push_back(check_transform_t_poisson());
        rows.push_back(check_rho_vs_transform_s());
        rows.push_back(check_v_integral(rng));
        rows.push_back(check_isometry(rng));
        rows.push_back(check_kernel(rng));
    }
    if (opt.slow) rows.push_back(check_monte_carlo(opt.seed));
    std::sort(rows.begin(), rows.end(),
              [](const ReportRow& a, const ReportRow& b) { return a.id < b.id; });
    return rows;
}

}  // namespace meixner
