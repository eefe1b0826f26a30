#pragma once

#include "meixner/params.hpp"
#include "meixner/poly.hpp"
#include "meixner/sheffer.hpp"
#include "meixner/weyl.hpp"

namespace meixner {

/// Concrete linear operators on polynomials. Monomial-basis operators:
/// Z, D, D_h, ScriptU/ScriptV (on falling-beta expansions written out in z),
/// BlackU/BlackV, Rho, ScriptR. Sheffer-basis operators: RawU, RawV,
/// RaisePlus, LowerMinus, Annihilator.
struct ConcreteOp {
    enum class Tag {
        Z,
        D,
        Dh,
        ScriptU,
        ScriptV,
        BlackU,
        BlackV,
        RawU,
        RawV,
        Rho,
        ScriptR,
        Annihilator,
        RaisePlus,
        LowerMinus,
    };

    Tag tag;
    MeixnerParams params;  // ignored by Z, D, Dh
    GaussRational h;       // Dh only
};

namespace detail {

inline ExactPoly apply_raw_u(const MeixnerParams& P, const ExactPoly& p) {
    require_basis(p, Basis::Sheffer, "U");
    if (p.is_zero()) return p;
    std::vector<GaussRational> out(p.coeffs.size() + 1);
    GaussRational soa = P.sigma_over_alpha();
    for (std::size_t n = 0; n < p.coeffs.size(); ++n) {
        out[n + 1] += p.coeffs[n];
        out[n] += (P.beta * GaussRational{Rat(n)} + soa) * p.coeffs[n];
    }
    return ExactPoly(Basis::Sheffer, std::move(out));
}

inline ExactPoly apply_raw_v(const MeixnerParams& P, const ExactPoly& p) {
    require_basis(p, Basis::Sheffer, "V");
    if (p.is_zero()) return p;
    std::vector<GaussRational> out(p.coeffs.size());
    for (std::size_t n = 0; n < p.coeffs.size(); ++n) {
        out[n] += p.coeffs[n];
        if (n >= 1) out[n - 1] += P.alpha * GaussRational{Rat(n)} * p.coeffs[n];
    }
    return ExactPoly(Basis::Sheffer, std::move(out));
}

}  // namespace detail

inline ExactPoly apply_concrete(const ConcreteOp& op, const ExactPoly& p) {
    using Tag = ConcreteOp::Tag;
    const MeixnerParams& P = op.params;
    switch (op.tag) {
        case Tag::Z: return mul_z(p);
        case Tag::D: return derivative(p);
        case Tag::Dh: return h_derivative(p, op.h);
        case Tag::ScriptU:  // Z + sigma/alpha
            return mul_z(p) + P.sigma_over_alpha() * p;
        case Tag::ScriptV:  // alpha D_beta + 1
            return P.alpha * h_derivative(p, P.beta) + p;
        case Tag::BlackU:  // Z + beta Z D + sigma/alpha
            return mul_z(p) + P.beta * mul_z(derivative(p)) + P.sigma_over_alpha() * p;
        case Tag::BlackV:  // alpha D + 1
            return P.alpha * derivative(p) + p;
        case Tag::Rho: {  // Z + lambda Z D + sigma/alpha + sigma D + eta Z D^2
            ExactPoly d = derivative(p);
            ExactPoly dd = derivative(d);
            return mul_z(p) + P.lambda * mul_z(d) + P.sigma_over_alpha() * p +
                   P.sigma_g() * d + P.eta * mul_z(dd);
        }
        case Tag::ScriptR: {  // ScriptU ScriptV
            ExactPoly v = P.alpha * h_derivative(p, P.beta) + p;
            return mul_z(v) + P.sigma_over_alpha() * v;
        }
        case Tag::RawU: return detail::apply_raw_u(P, p);
        case Tag::RawV: return detail::apply_raw_v(P, p);
        case Tag::Annihilator: return annihilator(P, p);
        case Tag::RaisePlus: return raise_op(p);
        case Tag::LowerMinus: return lower(p);
    }
    throw std::logic_error("apply_concrete: bad tag");
}

/// R^n 1 = sum_{k=1}^n (alpha-beta)^{n-k} S(n,k) (z + sigma/alpha | -beta)_k,
/// returned expanded in the monomial basis. n = 0 gives the constant 1.
inline ExactPoly script_r_on_one(const MeixnerParams& P, unsigned n) {
    if (n == 0) return ExactPoly::constant(GaussRational{1});
    ExactPoly acc = ExactPoly::zero();
    GaussRational ab = P.alpha - P.beta;
    for (unsigned k = 1; k <= n; ++k) {
        GaussRational w = pow_n(ab, n - k) * GaussRational{Rat(stirling2(n, k))};
        if (w.is_zero()) continue;
        acc = acc + w * genfact_poly(P.sigma_over_alpha(), -P.beta, k);
    }
    return acc;
}

/// Phi(z^n) = sum_{k=1}^n (alpha-beta)^{n-k} S(n,k) (sigma/alpha | -beta)_k:
/// the n-th moment of the orthogonality measure for Laguerre/Meixner-1, and
/// the n-th moment of x + sigma/alpha for Meixner-2.
inline GaussRational moments(const MeixnerParams& P, unsigned n) {
    if (n == 0) return GaussRational{1};
    GaussRational sum{0};
    GaussRational ab = P.alpha - P.beta;
    GaussRational soa = P.sigma_over_alpha();
    for (unsigned k = 1; k <= n; ++k)
        sum += pow_n(ab, n - k) * GaussRational{Rat(stirling2(n, k))} * genfact(soa, -P.beta, k);
    return sum;
}

/// The plain n-th moment of the orthogonality measure in every class; for
/// Meixner-2 this unwinds the shift binomially.
inline GaussRational raw_moment(const MeixnerParams& P, unsigned n) {
    if (P.cls != ShefferClass::MeixnerSecond) return moments(P, n);
    GaussRational sum{0};
    GaussRational msoa = -P.sigma_over_alpha();
    for (unsigned m = 0; m <= n; ++m)
        sum += GaussRational{Rat(binomial(n, m))} * pow_n(msoa, n - m) * moments(P, m);
    return sum;
}

/// Integral of (x | alpha-beta)_n (shifted by sigma/alpha for Meixner-2)
/// against the orthogonality measure: beta^n (sigma/eta)^(n).
inline GaussRational falling_alpha_beta_moment(const MeixnerParams& P, unsigned n) {
    GaussRational soe = P.sigma_g() / P.eta;
    return pow_n(P.beta, n) * rising(soe, n);
}

/// Applies a normal form sum c_{jk} U^j V^k to a Sheffer-basis polynomial
/// through the concrete operators U, V.
inline ExactPoly apply_normal_form(const MeixnerParams& P, const NormalForm& nf,
                                   const ExactPoly& p) {
    require_basis(p, Basis::Sheffer, "apply_normal_form");
    ExactPoly acc = ExactPoly::zero(Basis::Sheffer);
    for (const auto& [jk, c] : nf.terms) {
        ExactPoly q = p;
        for (unsigned i = 0; i < jk.second; ++i) q = detail::apply_raw_v(P, q);
        for (unsigned i = 0; i < jk.first; ++i) q = detail::apply_raw_u(P, q);
        acc = acc + c * q;
    }
    return acc;
}

/// Applies a word over {U,V} (read left to right as operator composition,
/// i.e. the rightmost letter acts first) to a Sheffer-basis polynomial.
inline ExactPoly apply_word(const MeixnerParams& P, const std::string& word, const ExactPoly& p) {
    require_basis(p, Basis::Sheffer, "apply_word");
    ExactPoly q = p;
    for (std::size_t i = word.size(); i-- > 0;) {
        if (word[i] == 'U')
            q = detail::apply_raw_u(P, q);
        else if (word[i] == 'V')
            q = detail::apply_raw_v(P, q);
        else
            throw std::invalid_argument("apply_word: letters must be U or V");
    }
    return q;
}

/// The conjugation operator: I maps (.|beta)_n to p_n. Input is a
/// falling-beta polynomial, output is in the monomial basis.
inline ExactPoly script_i(const MeixnerParams& P, const ExactPoly& p) {
    require_basis(p, Basis::FallingBeta, "script_i");
    ExactPoly acc = ExactPoly::zero();
    for (std::size_t n = 0; n < p.coeffs.size(); ++n) {
        if (p.coeffs[n].is_zero()) continue;
        acc = acc + p.coeffs[n] * ExactPoly(Basis::Monomial,
                                            detail::p_in_monomial(P, static_cast<unsigned>(n)));
    }
    return acc;
}

/// Inverse conjugation: expands a monomial polynomial in the p_n sequence and
/// returns the coefficients as a falling-beta polynomial.
inline ExactPoly script_i_inverse(const MeixnerParams& P, const ExactPoly& p) {
    require_basis(p, Basis::Monomial, "script_i_inverse");
    std::vector<GaussRational> out(p.coeffs.size());
    for (std::size_t m = 0; m < p.coeffs.size(); ++m) {
        if (p.coeffs[m].is_zero()) continue;
        auto c = detail::monomial_in_p(P, static_cast<unsigned>(m));
        for (std::size_t i = 0; i < c.size(); ++i) out[i] += p.coeffs[m] * c[i];
    }
    return ExactPoly(Basis::FallingBeta, std::move(out));
}

}  // namespace meixner
