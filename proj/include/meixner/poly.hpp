#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "meixner/combinat.hpp"
#include "meixner/exact.hpp"

namespace meixner {

enum class Basis { Monomial, FallingBeta, Sheffer };

inline const char* basis_name(Basis b) {
    switch (b) {
        case Basis::Monomial: return "monomial";
        case Basis::FallingBeta: return "falling-beta";
        case Basis::Sheffer: return "sheffer";
    }
    return "?";
}

/// Polynomial over GaussRational in a tagged basis. coeffs[n] multiplies the
/// n-th basis element (z^n, (z|beta)_n, or s_n). Trailing zeros are trimmed;
/// the zero polynomial has an empty coefficient vector.
struct ExactPoly {
    Basis basis = Basis::Monomial;
    std::vector<GaussRational> coeffs;

    ExactPoly() = default;
    ExactPoly(Basis b, std::vector<GaussRational> c) : basis(b), coeffs(std::move(c)) { trim(); }

    static ExactPoly zero(Basis b = Basis::Monomial) { return ExactPoly(b, {}); }
    static ExactPoly constant(const GaussRational& c, Basis b = Basis::Monomial) {
        return ExactPoly(b, {c});
    }
    /// The n-th basis element itself.
    static ExactPoly unit(unsigned n, Basis b) {
        std::vector<GaussRational> c(n + 1);
        c[n] = GaussRational{1};
        return ExactPoly(b, std::move(c));
    }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    GaussRational coeff(unsigned n) const {
        return n < coeffs.size() ? coeffs[n] : GaussRational{0};
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) {
        return a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

inline void require_basis(const ExactPoly& p, Basis b, const char* where) {
    if (p.basis != b && !p.is_zero())
        throw std::invalid_argument(std::string(where) + ": expected " + basis_name(b) +
                                    " basis, got " + basis_name(p.basis));
}

inline ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.basis != b.basis) throw std::invalid_argument("poly add: basis mismatch");
    std::vector<GaussRational> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return ExactPoly(a.basis, std::move(c));
}

inline ExactPoly operator*(const GaussRational& s, const ExactPoly& p) {
    if (s.is_zero()) return ExactPoly::zero(p.basis);
    std::vector<GaussRational> c(p.coeffs);
    for (auto& x : c) x *= s;
    return ExactPoly(p.basis, std::move(c));
}

inline ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
    return a + GaussRational{-1} * b;
}

/// Product in the monomial basis.
inline ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    require_basis(a, Basis::Monomial, "poly mul");
    require_basis(b, Basis::Monomial, "poly mul");
    if (a.is_zero() || b.is_zero()) return ExactPoly::zero();
    std::vector<GaussRational> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return ExactPoly(Basis::Monomial, std::move(c));
}

inline GaussRational eval(const ExactPoly& p, const GaussRational& z) {
    require_basis(p, Basis::Monomial, "poly eval");
    GaussRational acc{0};
    for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * z + p.coeffs[i];
    return acc;
}

inline std::complex<double> eval(const ExactPoly& p, std::complex<double> z) {
    require_basis(p, Basis::Monomial, "poly eval");
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * z + p.coeffs[i].to_complex();
    return acc;
}

/// p(z + c), monomial basis.
inline ExactPoly shift_arg(const ExactPoly& p, const GaussRational& c) {
    require_basis(p, Basis::Monomial, "shift_arg");
    if (c.is_zero() || p.is_zero()) return p;
    std::vector<GaussRational> out(p.coeffs.size());
    for (std::size_t n = 0; n < p.coeffs.size(); ++n) {
        // (z+c)^n = sum_k C(n,k) c^{n-k} z^k
        for (std::size_t k = 0; k <= n; ++k)
            out[k] += p.coeffs[n] * GaussRational{Rat(binomial(static_cast<unsigned>(n),
                                                               static_cast<unsigned>(k)))} *
                      pow_n(c, static_cast<unsigned>(n - k));
    }
    return ExactPoly(Basis::Monomial, std::move(out));
}

inline ExactPoly derivative(const ExactPoly& p) {
    require_basis(p, Basis::Monomial, "derivative");
    if (p.coeffs.size() <= 1) return ExactPoly::zero();
    std::vector<GaussRational> c(p.coeffs.size() - 1);
    for (std::size_t n = 1; n < p.coeffs.size(); ++n) c[n - 1] = GaussRational{Rat(n)} * p.coeffs[n];
    return ExactPoly(Basis::Monomial, std::move(c));
}

/// h-derivative D_h p = (p(z+h) - p(z))/h; D_0 is the ordinary derivative.
inline ExactPoly h_derivative(const ExactPoly& p, const GaussRational& h) {
    if (h.is_zero()) return derivative(p);
    return GaussRational{1} / h * (shift_arg(p, h) - p);
}

/// Multiplication by the variable, monomial basis.
inline ExactPoly mul_z(const ExactPoly& p) {
    require_basis(p, Basis::Monomial, "mul_z");
    if (p.is_zero()) return p;
    std::vector<GaussRational> c(p.coeffs.size() + 1);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) c[i + 1] = p.coeffs[i];
    return ExactPoly(Basis::Monomial, std::move(c));
}

/// Expanded monomial form of (z + r | h)_n.
inline ExactPoly genfact_poly(const GaussRational& r, const GaussRational& h, unsigned n) {
    ExactPoly acc = ExactPoly::constant(GaussRational{1});
    for (unsigned j = 0; j < n; ++j) {
        GaussRational c = r - GaussRational{Rat(j)} * h;
        acc = mul_z(acc) + c * acc;
    }
    return acc;
}

}  // namespace meixner
