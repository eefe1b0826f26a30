#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "meixner/fock.hpp"
#include "meixner/measures.hpp"
#include "meixner/operators.hpp"
#include "meixner/sheffer.hpp"

namespace meixner {

// ---------------------------------------------------------------------------
// Domains
// ---------------------------------------------------------------------------

enum class DomainKind { ScriptD, FrakD, Psi };

/// Membership in the open domain D_{alpha,beta,sigma} (ScriptD), the
/// complex-parameter domain D_{alpha,beta} (FrakD), or Psi_{alpha,beta,sigma}
/// = {z : alpha z + sigma in FrakD}.
inline bool in_domain(DomainKind which, Cplx z, const NumericParams& p) {
    switch (which) {
        case DomainKind::ScriptD:
            if (p.cls == ShefferClass::MeixnerFirst) return true;
            return (p.alpha * z).real() > -0.5 * p.sigma;
        case DomainKind::FrakD: {
            if (p.cls == ShefferClass::MeixnerFirst) return true;
            if (p.cls == ShefferClass::Laguerre || p.alpha.real() == 0.0) return z.real() > 0.0;
            return z.real() > 0.0 &&
                   std::abs(z.imag()) < z.real() * p.alpha.imag() / p.alpha.real();
        }
        case DomainKind::Psi: return in_domain(DomainKind::FrakD, p.alpha * z + p.sigma, p);
    }
    return false;
}

inline void require_domain(DomainKind which, Cplx z, const NumericParams& p, const char* what) {
    if (!in_domain(which, z, p)) {
        std::string msg = std::string(what) + ": z outside ";
        switch (which) {
            case DomainKind::ScriptD:
                msg += "the domain D (Re(alpha z) > -sigma/2 violated)";
                break;
            case DomainKind::FrakD: msg += "the parameter domain"; break;
            case DomainKind::Psi: msg += "the domain Psi"; break;
        }
        throw std::domain_error(msg);
    }
}

// ---------------------------------------------------------------------------
// Coherent states
// ---------------------------------------------------------------------------

/// E(x,z) = sum z^n s_n(x) / (n! (sigma|-eta)_n), summed until a majorant of
/// the tail (from the recurrence bound on |s_n(x)| and the superfactorial
/// weight growth) certifies the requested tolerance.
inline SeriesEval coherent_E(const NumericParams& p, double x, Cplx z, double tol = 1e-12) {
    ComplexKahanSum acc;
    double s_prev = 0.0, s_cur = 1.0;  // s_{n-1}(x), s_n(x)
    double az = std::abs(z);
    double ax = std::abs(x), al = std::abs(p.ell);
    // |s_n(x)| <= M_n with M_{n+1} = (|x|+lambda n+|l|) M_n + c_n M_{n-1};
    // tracked through the ratio mr_n = M_{n+1}/M_n (floored, which only
    // inflates the majorant), and the term majorant T_n = |z|^n M_n / rho_n
    // through its ratio q_n = |z| mr_n / ((n+1)(sigma + n eta)).
    constexpr double kFloor = 1e-6;
    double mr = std::max(ax + al, kFloor);  // M_1/M_0
    double T = 1.0;                         // majorant of |t_n|, starting at n = 0
    double q_prev1 = 1.0, q_prev2 = 1.0;
    Cplx zn = 1.0;
    double rho = 1.0;
    for (unsigned n = 0; n < 4000; ++n) {
        acc.add(zn * s_cur / rho);
        double c_next = p.sigma * (n + 1.0) + p.eta * (n + 1.0) * n;  // c_{n+1}
        double q = az * mr / ((n + 1.0) * (p.sigma + n * p.eta));
        double T_next = T * q;
        if (n >= 3 && q < 0.5 && q <= q_prev1 && q_prev1 <= q_prev2) {
            double tail = T_next / (1.0 - q);
            if (tail <= tol * std::max(1.0, std::abs(acc.value())))
                return {acc.value(), n + 1, tail};
        }
        double c1 = p.sigma * n + p.eta * n * (n - 1.0);
        double s_next = (x - p.lambda * n - p.ell) * s_cur - c1 * s_prev;
        s_prev = s_cur;
        s_cur = s_next;
        // M_{n+2}/M_{n+1} = (|x| + lambda(n+1) + |l|) + c_{n+1} / mr
        mr = std::max((ax + p.lambda * (n + 1.0) + al) + c_next / mr, kFloor);
        q_prev2 = q_prev1;
        q_prev1 = q;
        T = T_next;
        rho *= (n + 1.0) * (p.sigma + n * p.eta);
        zn *= z;
    }
    throw std::runtime_error("coherent_E: tolerance unreachable within term cap");
}

/// The Poisson-mixture closed forms of E(x,z), integrating the class-specific
/// kernel xi |-> curly-E(x, beta xi) against pi_{z/beta}.
inline SeriesEval coherent_E_closed(const NumericParams& p, double x, Cplx z,
                                    const QuadConfig& cfg = {}) {
    using std::numbers::pi;
    Cplx value;
    switch (p.cls) {
        case ShefferClass::Laguerre: {
            double a = p.alpha.real();
            if (x <= 0.0) throw std::domain_error("coherent_E_closed: x outside R+");
            double soe = p.sigma / p.eta;
            value = poisson_expect(
                z / a,
                [&](unsigned xi) {
                    double r = 1.0;
                    for (unsigned j = 0; j < xi; ++j) r *= (soe + j);
                    return Cplx(std::pow(x / a, static_cast<double>(xi)) / r, 0.0);
                },
                cfg);
            break;
        }
        case ShefferClass::MeixnerFirst: {
            double a = p.alpha.real(), b = p.beta.real();
            double nd = x / (a - b);
            double nr = std::round(nd);
            if (nr < 0.0 || std::abs(nd - nr) > 1e-9 * (1.0 + std::abs(nd)))
                throw std::domain_error("coherent_E_closed: x outside (alpha-beta) N0");
            unsigned n = static_cast<unsigned>(nr);
            double denom = genfact_num(p.sigma, -p.eta, n).real();
            value = poisson_expect(
                z / b,
                [&](unsigned xi) {
                    return std::pow(1.0 - b / a, static_cast<double>(xi)) *
                           genfact_num(xi * p.eta + p.sigma, -p.eta, n) / denom;
                },
                cfg);
            break;
        }
        case ShefferClass::MeixnerSecond: {
            double ia = p.alpha.imag();
            double phi = pi / 2.0 - std::arg(p.alpha);
            const Cplx i{0.0, 1.0};
            Cplx w = -i * x / (2.0 * ia) - i * p.sigma * p.alpha / (2.0 * p.eta * ia);
            double soe = p.sigma / p.eta;
            double base = 2.0 * std::cos(phi);
            value = poisson_expect(
                z / p.beta,
                [&](unsigned xi) {
                    Cplx t = 1.0;
                    for (unsigned j = 0; j < xi; ++j) t *= (w + static_cast<double>(j));
                    double r = 1.0;
                    for (unsigned j = 0; j < xi; ++j) r *= (soe + j);
                    return std::pow(base, static_cast<double>(xi)) / r *
                           std::exp(i * phi * static_cast<double>(xi)) * t;
                },
                cfg);
            break;
        }
        default: throw std::logic_error("coherent_E_closed: bad class");
    }
    return {value, 0, cfg.abs_tol};
}

// ---------------------------------------------------------------------------
// curly-E and the intermediate transform
// ---------------------------------------------------------------------------

/// Closed form of curly-E(x, z) for z in the domain D.
inline Cplx curly_E(const NumericParams& p, double x, Cplx z) {
    using std::numbers::pi;
    require_domain(DomainKind::ScriptD, z, p, "curly_E");
    switch (p.cls) {
        case ShefferClass::Laguerre: {
            double a = p.alpha.real();
            if (x <= 0.0) throw std::domain_error("curly_E: x outside R+");
            double a2 = a * a;
            return gamma_ratio(p.sigma / a2, (a * z + p.sigma) / a2) *
                   std::exp((z / a) * std::log(x / a));
        }
        case ShefferClass::MeixnerFirst: {
            double a = p.alpha.real(), b = p.beta.real();
            double nd = x / (a - b);
            double nr = std::round(nd);
            if (nr < 0.0 || std::abs(nd - nr) > 1e-9 * (1.0 + std::abs(nd)))
                throw std::domain_error("curly_E: x outside (alpha-beta) N0");
            unsigned n = static_cast<unsigned>(nr);
            return std::exp((z / b) * std::log(1.0 - b / a)) *
                   genfact_num(a * z + p.sigma, -p.eta, n) /
                   genfact_num(p.sigma, -p.eta, n).real();
        }
        case ShefferClass::MeixnerSecond: {
            double ia = p.alpha.imag();
            double phi = pi / 2.0 - std::arg(p.alpha);
            const Cplx i{0.0, 1.0};
            Cplx az_over_eta = p.alpha * z / p.eta;
            Cplx w = -i * x / (2.0 * ia) - i * p.sigma * p.alpha / (2.0 * p.eta * ia);
            return std::exp(az_over_eta * std::log(2.0 * std::cos(phi))) *
                   gamma_ratio(p.sigma / p.eta, (p.sigma + p.alpha * z) / p.eta) *
                   std::exp(i * phi * az_over_eta) * gamma_ratio(w + az_over_eta, w);
        }
    }
    throw std::logic_error("curly_E: bad class");
}

/// Series form sum (z|beta)_n s_n(x) / (n! (sigma|-eta)_n). Used as the
/// cross-check path; at z in beta N0 the series terminates exactly.
inline SeriesEval curly_E_series(const NumericParams& p, double x, Cplx z, double tol = 1e-10) {
    ComplexKahanSum acc;
    double s_prev = 0.0, s_cur = 1.0;
    double rho = 1.0;
    Cplx fall = 1.0;  // (z|beta)_n
    int quiet = 0;
    for (unsigned n = 0; n < 4000; ++n) {
        Cplx term = fall * s_cur / rho;
        acc.add(term);
        if (std::abs(term) < 0.2 * tol * std::max(1.0, std::abs(acc.value())))
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 6) return {acc.value(), n + 1, tol};
        double c1 = p.sigma * n + p.eta * n * (n - 1.0);
        double s_next = (x - p.lambda * n - p.ell) * s_cur - c1 * s_prev;
        s_prev = s_cur;
        s_cur = s_next;
        rho *= (n + 1.0) * (p.sigma + n * p.eta);
        fall *= (z - static_cast<double>(n) * p.beta);
    }
    throw std::runtime_error("curly_E_series: no settling within term cap");
}

// ---------------------------------------------------------------------------
// The three transforms on polynomial truncations
// ---------------------------------------------------------------------------

/// (S f)(z) = sum f_n z^n for f = sum f_n s_n.
inline Cplx transform_S(const std::vector<Cplx>& sheffer_coeffs, Cplx z) {
    Cplx acc = 0.0;
    for (std::size_t n = sheffer_coeffs.size(); n-- > 0;) acc = acc * z + sheffer_coeffs[n];
    return acc;
}

/// Quadrature route: integral of f E(.,z) against the orthogonality measure.
inline Cplx transform_S_quadrature(const MeixnerParams& params,
                                   const std::vector<Cplx>& sheffer_coeffs, Cplx z,
                                   const QuadConfig& cfg = {}) {
    NumericParams np = to_numeric(params);
    unsigned N = sheffer_coeffs.empty() ? 0 : static_cast<unsigned>(sheffer_coeffs.size() - 1);
    auto f = [&](double x) {
        auto s = sheffer_values(np, N, x);
        Cplx fx = 0.0;
        for (std::size_t n = 0; n < sheffer_coeffs.size(); ++n) fx += sheffer_coeffs[n] * s[n];
        return fx * coherent_E(np, x, z, 0.1 * cfg.rel_tol).value;
    };
    return integrate(measure_of(np), f, cfg);
}

/// (curly-S f)(z) = sum f_n (z|beta)_n for f = sum f_n s_n (finite sum).
inline Cplx transform_curlyS(const NumericParams& p, const std::vector<Cplx>& sheffer_coeffs,
                             Cplx z) {
    require_domain(DomainKind::ScriptD, z, p, "transform_curlyS");
    ComplexKahanSum acc;
    Cplx fall = 1.0;
    for (std::size_t n = 0; n < sheffer_coeffs.size(); ++n) {
        acc.add(sheffer_coeffs[n] * fall);
        fall *= (z - static_cast<double>(n) * p.beta);
    }
    return acc.value();
}

/// Integral route: (curly-S f)(z) as the integral of f against
/// mu_{alpha,beta,alpha z + sigma} (shifted argument in the Meixner-2 class,
/// where f must be a polynomial and z must lie in Psi).
inline Cplx transform_curlyS_integral(const MeixnerParams& params, const ExactPoly& f, Cplx z,
                                      const QuadConfig& cfg = {}) {
    NumericParams np = to_numeric(params);
    ExactPoly mono = to_monomial(params, f);
    Cplx zeta = np.alpha * z + np.sigma;
    if (np.cls == ShefferClass::MeixnerSecond) {
        require_domain(DomainKind::Psi, z, np, "transform_curlyS_integral");
        return integrate(measure_of(np, zeta), [&](double x) { return eval(mono, Cplx(x) + z); },
                         cfg);
    }
    require_domain(DomainKind::ScriptD, z, np, "transform_curlyS_integral");
    return integrate(measure_of(np, zeta), [&](double x) { return eval(mono, Cplx(x)); }, cfg);
}

/// (T g)(z) = sum g_n z^n for g = sum g_n (.|beta)_n.
inline Cplx transform_T(const std::vector<Cplx>& falling_coeffs, Cplx z) {
    Cplx acc = 0.0;
    for (std::size_t n = falling_coeffs.size(); n-- > 0;) acc = acc * z + falling_coeffs[n];
    return acc;
}

/// Poisson route: (T g)(z) = int g(beta xi) d pi_{z/beta}(xi).
inline Cplx transform_T_poisson(const NumericParams& p, const std::vector<Cplx>& falling_coeffs,
                                Cplx z, const QuadConfig& cfg = {}) {
    return poisson_expect(
        z / p.beta,
        [&](unsigned xi) {
            // g(beta xi) = sum g_n beta^n (xi)_n
            Cplx acc = 0.0;
            Cplx w = 1.0;
            for (std::size_t n = 0; n < falling_coeffs.size(); ++n) {
                acc += falling_coeffs[n] * w;
                w *= p.beta * (static_cast<double>(xi) - static_cast<double>(n));
            }
            return acc;
        },
        cfg);
}

/// (S f)(z) as the expectation of f against the random measure
/// mu_{alpha,beta,eta xi+sigma} with xi Poisson(z/beta); the Meixner-2 class
/// uses the shifted integrand f(x + beta xi).
inline Cplx rho_expectation(const MeixnerParams& params, const ExactPoly& f, Cplx z,
                            const QuadConfig& cfg = {}) {
    NumericParams np = to_numeric(params);
    ExactPoly mono = to_monomial(params, f);
    bool shifted = (np.cls == ShefferClass::MeixnerSecond);
    return poisson_expect(
        z / np.beta,
        [&](unsigned xi) {
            Cplx zeta = np.eta * static_cast<double>(xi) + np.sigma;
            Cplx shift = shifted ? np.beta * static_cast<double>(xi) : Cplx(0.0);
            return integrate(measure_of(np, zeta),
                             [&](double x) { return eval(mono, Cplx(x) + shift); }, cfg);
        },
        cfg);
}

/// Numeric value of (V p)(z) by the class-specific integral formula.
inline Cplx v_integral_action(const MeixnerParams& params, const ExactPoly& p, Cplx z,
                              const QuadConfig& cfg = {}) {
    NumericParams np = to_numeric(params);
    ExactPoly mono = to_monomial(params, p);
    switch (np.cls) {
        case ShefferClass::Laguerre: {
            MeasureSpec mu = gamma_measure(np.alpha.real(), np.eta);
            return integrate(mu, [&](double x) { return eval(mono, z + Cplx(x)); }, cfg);
        }
        case ShefferClass::MeixnerFirst: {
            double a = np.alpha.real(), b = np.beta.real();
            MeasureSpec mu = negbinomial_measure(a, b, np.eta);
            Cplx at_z = eval(mono, z);
            return integrate(
                mu, [&](double x) { return eval(mono, z + Cplx(x)) * (a / b) - at_z * ((a - b) / b); },
                cfg);
        }
        case ShefferClass::MeixnerSecond: {
            MeasureSpec mu = meixner_measure(np.alpha, np.eta);
            Cplx at_z = eval(mono, z);
            return integrate(mu,
                             [&](double x) {
                                 return eval(mono, z + Cplx(x) + np.beta) * (np.alpha / np.beta) -
                                        at_z * ((np.alpha - np.beta) / np.beta);
                             },
                             cfg);
        }
    }
    throw std::logic_error("v_integral_action: bad class");
}

/// Exact check that A^- E_N(.,z) = z E_{N-1}(.,z) for the degree-N truncation
/// of the coherent state (z a Gaussian rational).
inline bool annihilator_eigen_check(const MeixnerParams& params, const GaussRational& z,
                                    unsigned N) {
    std::vector<GaussRational> coeffs(N + 1);
    GaussRational rho{1};
    GaussRational zn{1};
    for (unsigned n = 0; n <= N; ++n) {
        coeffs[n] = zn / rho;
        rho *= GaussRational{Rat(n + 1)} *
               (params.sigma_g() + GaussRational{Rat(n)} * params.eta);
        zn *= z;
    }
    ExactPoly EN(Basis::Sheffer, coeffs);
    coeffs.pop_back();
    ExactPoly ENm1(Basis::Sheffer, coeffs);
    return annihilator(params, EN) == z * ENm1;
}

}  // namespace meixner
