#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "meixner/quadrature.hpp"

namespace meixner {

namespace detail {

/// Truncation point T for int_0^infty e^{-x cosh t} cosh(theta t) dt: beyond
/// T the integrand is dominated by e^{-x cosh t + |theta| t}, and
///   int_T^infty e^{-x cosh t + |theta| t} dt <= e^{-x cosh T + |theta| T}
///                                              / (x sinh T - |theta|),
/// which is pushed below the absolute target.
inline double bessel_k_cutoff(double theta, double x, double abs_tol) {
    double t = 1.0;
    double a = std::abs(theta);
    for (int i = 0; i < 200; ++i) {
        double denom = x * std::sinh(t) - a;
        if (denom > 0.0) {
            double logtail = -x * std::cosh(t) + a * t - std::log(denom);
            if (logtail < std::log(abs_tol)) return t;
        }
        t += 0.5;
    }
    return t;
}

}  // namespace detail

/// Modified Bessel function of the second kind through the integral
/// representation K_theta(x) = int_0^infty e^{-x cosh t} cosh(theta t) dt.
/// Valid for x > 0 and any real theta (the representation is even in theta).
inline double bessel_k(double theta, double x, double rel_tol = 1e-12) {
    if (x <= 0.0) throw std::domain_error("bessel_k: x must be > 0");
    double T = detail::bessel_k_cutoff(theta, x, rel_tol * std::exp(-x));
    auto integrand = [theta, x](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(theta * t); };
    // crude positive lower bound of the result near t = 0 to scale abs_tol
    double scale = std::exp(-x);
    return gk_adaptive_real(integrand, 0.0, T, rel_tol * scale, rel_tol, 200000);
}

/// I_theta by its power series (x/2)^theta sum (x/2)^{2n} / (n! Gamma(theta+n+1));
/// adequate for the moderate (theta, x) used in cross-checks.
inline double bessel_i_series(double theta, double x) {
    double half = 0.5 * x;
    double term = std::pow(half, theta) / std::tgamma(theta + 1.0);
    double hh = half * half;
    double sum = term;
    for (int n = 0; n < 400; ++n) {
        term *= hh / ((n + 1.0) * (theta + n + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) && n > 4) break;
    }
    return sum;
}

/// Cross-check path: K through I_{+-theta}; integer orders are handled by the
/// even Richardson limit in theta (the defining limit of the formula).
inline double bessel_k_series(double theta, double x) {
    using std::numbers::pi;
    theta = std::abs(theta);
    double nearest = std::round(theta);
    if (std::abs(theta - nearest) > 1e-6) {
        return pi / (2.0 * std::sin(theta * pi)) *
               (bessel_i_series(-theta, x) - bessel_i_series(theta, x));
    }
    auto off = [&](double eps) {
        double lo = bessel_k_series(nearest - eps, x);
        double hi = bessel_k_series(nearest + eps, x);
        return 0.5 * (lo + hi);
    };
    // K is smooth and even around integer orders: Richardson in eps^2
    double m1 = off(1e-3);
    double m2 = off(5e-4);
    return (4.0 * m2 - m1) / 3.0;
}

}  // namespace meixner
