#pragma once

#include <vector>

#include "meixner/combinat.hpp"
#include "meixner/params.hpp"
#include "meixner/poly.hpp"

namespace meixner {

namespace detail {

/// Monic sequence from the three-term recurrence
///   x q_n = q_{n+1} + (lambda n + shift) q_n + (sigma n + eta n(n-1)) q_{n-1}.
inline ExactPoly recurrence_poly(const MeixnerParams& p, const GaussRational& shift, unsigned n) {
    ExactPoly prev;                                        // q_{-1} = 0
    ExactPoly cur = ExactPoly::constant(GaussRational{1});  // q_0 = 1
    for (unsigned m = 0; m < n; ++m) {
        GaussRational b = p.lambda * GaussRational{Rat(m)} + shift;
        GaussRational c = p.sigma_g() * GaussRational{Rat(m)} +
                          p.eta * GaussRational{Rat(m) * Rat(m > 0 ? m - 1 : 0)};
        ExactPoly next = mul_z(cur) - b * cur - c * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace detail

/// s_n in the monomial basis (monic, degree n).
inline ExactPoly sheffer_poly(const MeixnerParams& p, unsigned n) {
    return detail::recurrence_poly(p, p.ell, n);
}

/// p_n: the recurrence with shift sigma/alpha regardless of class. Coincides
/// with s_n for Laguerre/Meixner-1; for Meixner-2, s_n(x) = p_n(x + sigma/alpha).
inline ExactPoly shifted_sheffer_poly(const MeixnerParams& p, unsigned n) {
    return detail::recurrence_poly(p, p.sigma_over_alpha(), n);
}

// ---- ladder operators on Sheffer-basis polynomials ----------------------

/// Lowering: s_n -> n s_{n-1}.
inline ExactPoly lower(const ExactPoly& p) {
    require_basis(p, Basis::Sheffer, "lower");
    if (p.coeffs.size() <= 1) return ExactPoly::zero(Basis::Sheffer);
    std::vector<GaussRational> c(p.coeffs.size() - 1);
    for (std::size_t n = 1; n < p.coeffs.size(); ++n)
        c[n - 1] = GaussRational{Rat(n)} * p.coeffs[n];
    return ExactPoly(Basis::Sheffer, std::move(c));
}

/// Raising: s_n -> s_{n+1}.
inline ExactPoly raise_op(const ExactPoly& p) {
    require_basis(p, Basis::Sheffer, "raise");
    if (p.is_zero()) return p;
    std::vector<GaussRational> c(p.coeffs.size() + 1);
    for (std::size_t n = 0; n < p.coeffs.size(); ++n) c[n + 1] = p.coeffs[n];
    return ExactPoly(Basis::Sheffer, std::move(c));
}

/// A^- = sigma d^- + eta d^+ (d^-)^2; acts as s_n -> (sigma n + eta n(n-1)) s_{n-1}.
inline ExactPoly annihilator(const MeixnerParams& params, const ExactPoly& p) {
    require_basis(p, Basis::Sheffer, "annihilator");
    if (p.coeffs.size() <= 1) return ExactPoly::zero(Basis::Sheffer);
    std::vector<GaussRational> c(p.coeffs.size() - 1);
    for (std::size_t n = 1; n < p.coeffs.size(); ++n) {
        GaussRational factor = params.sigma_g() * GaussRational{Rat(n)} +
                               params.eta * GaussRational{Rat(n) * Rat(n - 1)};
        c[n - 1] = factor * p.coeffs[n];
    }
    return ExactPoly(Basis::Sheffer, std::move(c));
}

// ---- monomial <-> falling-beta ------------------------------------------

/// z^n = sum_k S(n,k) beta^{n-k} (z|beta)_k.
inline ExactPoly monomial_to_falling(const ExactPoly& p, const GaussRational& beta) {
    require_basis(p, Basis::Monomial, "monomial_to_falling");
    std::vector<GaussRational> out(p.coeffs.size());
    for (std::size_t n = 0; n < p.coeffs.size(); ++n) {
        if (p.coeffs[n].is_zero()) continue;
        for (std::size_t k = 0; k <= n; ++k) {
            GaussRational c{Rat(stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k)))};
            out[k] += p.coeffs[n] * c * pow_n(beta, static_cast<unsigned>(n - k));
        }
    }
    return ExactPoly(Basis::FallingBeta, std::move(out));
}

/// (z|beta)_n = sum_k s(n,k) beta^{n-k} z^k.
inline ExactPoly falling_to_monomial(const ExactPoly& p, const GaussRational& beta) {
    require_basis(p, Basis::FallingBeta, "falling_to_monomial");
    std::vector<GaussRational> out(p.coeffs.size());
    for (std::size_t n = 0; n < p.coeffs.size(); ++n) {
        if (p.coeffs[n].is_zero()) continue;
        for (std::size_t k = 0; k <= n; ++k) {
            GaussRational c{Rat(stirling1(static_cast<unsigned>(n), static_cast<unsigned>(k)))};
            out[k] += p.coeffs[n] * c * pow_n(beta, static_cast<unsigned>(n - k));
        }
    }
    return ExactPoly(Basis::Monomial, std::move(out));
}

// ---- monomial <-> p-basis via the closed expansions ----------------------

namespace detail {

/// Triangle of generalized Stirling numbers S(n,k;h,r) grown by the two-term
/// recurrence S(n+1,k) = S(n,k-1) + (r - (n+k)h) S(n,k), which follows from
/// (z+r|h)_{n+1} = (z + r - nh)(z+r|h)_n and
/// z (z|-h)_k = (z|-h)_{k+1} - kh (z|-h)_k. Used for bulk basis conversions;
/// gen_stirling (the Lah-sum route) stays the reference for single values.
class GenStirlingTriangle {
public:
    GenStirlingTriangle(GaussRational h, GaussRational r) : h_(std::move(h)), r_(std::move(r)) {
        rows_.push_back({GaussRational{1}});
    }

    const GaussRational& at(unsigned n, unsigned k) {
        if (k > n) throw std::domain_error("GenStirlingTriangle: k > n");
        while (rows_.size() <= n) {
            unsigned m = static_cast<unsigned>(rows_.size()) - 1;  // previous row index
            const auto& prev = rows_[m];
            std::vector<GaussRational> row(m + 2);
            for (unsigned j = 0; j <= m + 1; ++j) {
                GaussRational v = (j > 0) ? prev[j - 1] : GaussRational{0};
                if (j <= m)
                    v += (r_ - GaussRational{Rat(m + j)} * h_) * prev[j];
                row[j] = std::move(v);
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    GaussRational h_, r_;
    std::vector<std::vector<GaussRational>> rows_;
};

/// Coefficients c_0..c_m of z^m = c_0 + sum_{i>=1} c_i p_i(z):
///   c_0 = sum_{k=1}^m (a-b)^{m-k} S(m,k) (sigma/a | -b)_k,
///   c_i = sum_{k=i}^m (a-b)^{m-k} S(m,k) S(k,i; -b, sigma/a).
inline std::vector<GaussRational> monomial_in_p(const MeixnerParams& p, unsigned m,
                                                GenStirlingTriangle& tri) {
    std::vector<GaussRational> c(m + 1);
    if (m == 0) {
        c[0] = GaussRational{1};
        return c;
    }
    GaussRational ab = p.alpha - p.beta;
    GaussRational soa = p.sigma_over_alpha();
    for (unsigned k = 1; k <= m; ++k) {
        GaussRational w = pow_n(ab, m - k) * GaussRational{Rat(stirling2(m, k))};
        if (w.is_zero()) continue;
        c[0] += w * genfact(soa, -p.beta, k);
        for (unsigned i = 1; i <= k; ++i) c[i] += w * tri.at(k, i);
    }
    return c;
}

inline std::vector<GaussRational> monomial_in_p(const MeixnerParams& p, unsigned m) {
    GenStirlingTriangle tri(-p.beta, p.sigma_over_alpha());
    return monomial_in_p(p, m, tri);
}

/// Monomial coefficients of p_n:
///   p_n(z) = (-sigma/a | b)_n + sum_{i=1}^n [sum_{k=i}^n S(n,k; b, -sigma/a)
///            (a-b)^{k-i} s(k,i)] z^i.
inline std::vector<GaussRational> p_in_monomial(const MeixnerParams& p, unsigned n,
                                                GenStirlingTriangle& tri) {
    std::vector<GaussRational> c(n + 1);
    GaussRational ab = p.alpha - p.beta;
    GaussRational soa = p.sigma_over_alpha();
    c[0] = genfact(-soa, p.beta, n);
    for (unsigned k = 1; k <= n; ++k) {
        GaussRational g = tri.at(n, k);
        if (g.is_zero()) continue;
        for (unsigned i = 1; i <= k; ++i)
            c[i] += g * pow_n(ab, k - i) * GaussRational{Rat(stirling1(k, i))};
    }
    return c;
}

inline std::vector<GaussRational> p_in_monomial(const MeixnerParams& p, unsigned n) {
    GenStirlingTriangle tri(p.beta, -p.sigma_over_alpha());
    return p_in_monomial(p, n, tri);
}

}  // namespace detail

// ---- monomial <-> Sheffer -------------------------------------------------

/// Primary path: the closed expansions above. For Meixner-2 the input is first
/// rewritten in the shifted variable y = x + sigma/alpha, since the expansions
/// are stated for p_n and s_n(x) = p_n(x + sigma/alpha).
inline ExactPoly to_sheffer(const MeixnerParams& params, const ExactPoly& p) {
    if (p.basis == Basis::Sheffer) return p;
    ExactPoly mono = p;
    if (p.basis == Basis::FallingBeta) mono = falling_to_monomial(p, params.beta);
    if (params.cls == ShefferClass::MeixnerSecond)
        mono = shift_arg(mono, -params.sigma_over_alpha());
    detail::GenStirlingTriangle tri(-params.beta, params.sigma_over_alpha());
    std::vector<GaussRational> out(mono.coeffs.size());
    for (std::size_t m = 0; m < mono.coeffs.size(); ++m) {
        if (mono.coeffs[m].is_zero()) continue;
        auto c = detail::monomial_in_p(params, static_cast<unsigned>(m), tri);
        for (std::size_t i = 0; i < c.size(); ++i) out[i] += mono.coeffs[m] * c[i];
    }
    return ExactPoly(Basis::Sheffer, std::move(out));
}

inline ExactPoly to_monomial(const MeixnerParams& params, const ExactPoly& p) {
    if (p.basis == Basis::Monomial) return p;
    if (p.basis == Basis::FallingBeta) return falling_to_monomial(p, params.beta);
    detail::GenStirlingTriangle tri(params.beta, -params.sigma_over_alpha());
    std::vector<GaussRational> out(p.coeffs.size());
    for (std::size_t n = 0; n < p.coeffs.size(); ++n) {
        if (p.coeffs[n].is_zero()) continue;
        auto c = detail::p_in_monomial(params, static_cast<unsigned>(n), tri);
        for (std::size_t i = 0; i < c.size(); ++i) out[i] += p.coeffs[n] * c[i];
    }
    ExactPoly mono(Basis::Monomial, std::move(out));
    if (params.cls == ShefferClass::MeixnerSecond)
        mono = shift_arg(mono, params.sigma_over_alpha());
    return mono;
}

inline ExactPoly to_falling_beta(const MeixnerParams& params, const ExactPoly& p) {
    if (p.basis == Basis::FallingBeta) return p;
    return monomial_to_falling(to_monomial(params, p), params.beta);
}

inline ExactPoly convert(const MeixnerParams& params, const ExactPoly& p, Basis target) {
    switch (target) {
        case Basis::Monomial: return to_monomial(params, p);
        case Basis::FallingBeta: return to_falling_beta(params, p);
        case Basis::Sheffer: return to_sheffer(params, p);
    }
    throw std::logic_error("convert: bad basis");
}

// ---- oracle route: triangular solve against the recurrence ----------------

/// Expresses a monomial polynomial in the monic sequence q_n given by
/// `gen(n)`, by back-substitution on degrees.
template <typename Gen>
inline std::vector<GaussRational> solve_in_monic_sequence(const ExactPoly& p, Gen&& gen) {
    require_basis(p, Basis::Monomial, "solve_in_monic_sequence");
    ExactPoly rem = p;
    std::vector<GaussRational> out(p.coeffs.size());
    for (int d = rem.degree(); d >= 0; d = rem.degree()) {
        GaussRational c = rem.coeff(static_cast<unsigned>(d));
        out[static_cast<std::size_t>(d)] = c;
        rem = rem - c * gen(static_cast<unsigned>(d));
        if (rem.degree() >= d) throw std::logic_error("solve: sequence not monic");
    }
    return out;
}

inline ExactPoly to_sheffer_by_solve(const MeixnerParams& params, const ExactPoly& p) {
    ExactPoly mono = (p.basis == Basis::Monomial) ? p : to_monomial(params, p);
    if (mono.is_zero()) return ExactPoly::zero(Basis::Sheffer);
    auto out = solve_in_monic_sequence(mono, [&](unsigned n) { return sheffer_poly(params, n); });
    return ExactPoly(Basis::Sheffer, std::move(out));
}

inline ExactPoly sheffer_to_monomial_by_recurrence(const MeixnerParams& params,
                                                   const ExactPoly& p) {
    require_basis(p, Basis::Sheffer, "sheffer_to_monomial_by_recurrence");
    ExactPoly acc = ExactPoly::zero();
    for (std::size_t n = 0; n < p.coeffs.size(); ++n)
        acc = acc + p.coeffs[n] * sheffer_poly(params, static_cast<unsigned>(n));
    return acc;
}

// ---- difference coefficients (falling-beta expansion from samples) --------

/// f_n = ((-1)^n / (n! beta^n)) sum_{k=0}^n (-1)^k C(n,k) phi(beta k),
/// the n-th falling-beta coefficient from the samples phi(beta k), k = 0..n.
inline GaussRational series_coefficients_by_difference(const std::vector<GaussRational>& values,
                                                       const GaussRational& beta, unsigned n) {
    if (beta.is_zero())
        throw std::domain_error("series_coefficients_by_difference: beta must be nonzero");
    if (values.size() < n + 1)
        throw std::invalid_argument("series_coefficients_by_difference: need n+1 samples");
    GaussRational sum{0};
    for (unsigned k = 0; k <= n; ++k) {
        GaussRational t{Rat(binomial(n, k))};
        t *= values[k];
        if (k % 2 == 1) t = -t;
        sum += t;
    }
    GaussRational scale = GaussRational{Rat(factorial(n))} * pow_n(beta, n);
    GaussRational result = sum / scale;
    if (n % 2 == 1) result = -result;
    return result;
}

}  // namespace meixner
