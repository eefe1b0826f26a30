#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace meixner {

namespace detail {

// Lanczos coefficients for g = 607/128, N = 15 (Godfrey's tables); relative
// accuracy around 1e-14 on the right half-plane in double precision.
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

inline std::complex<double> lanczos_sum(std::complex<double> z) {
    // z here is the argument shifted so that the series is evaluated at
    // z, z+1, ...; caller guarantees Re(z) >= 0.5.
    std::complex<double> s = kLanczos[0];
    for (int k = 1; k < 15; ++k) s += kLanczos[k] / (z + static_cast<double>(k - 1));
    return s;
}

}  // namespace detail

inline bool is_nonpositive_integer(std::complex<double> z, double eps = 1e-13) {
    if (std::abs(z.imag()) > eps) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= eps * std::max(1.0, std::abs(z.real()));
}

/// Gamma(z) on the complex plane via the Lanczos approximation, with the
/// reflection formula for Re(z) < 1/2. Throws on (numerical) poles.
inline std::complex<double> complex_gamma(std::complex<double> z) {
    using std::numbers::pi;
    if (is_nonpositive_integer(z))
        throw std::domain_error("complex_gamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
    }
    std::complex<double> base = z + (detail::kLanczosG - 0.5);
    return std::sqrt(2.0 * pi) * std::pow(base, z - 0.5) * std::exp(-base) *
           detail::lanczos_sum(z);
}

/// log Gamma, principal value on the right half-plane (used to keep ratios of
/// large Gamma values inside double range).
inline std::complex<double> complex_log_gamma(std::complex<double> z) {
    using std::numbers::pi;
    if (is_nonpositive_integer(z))
        throw std::domain_error("complex_log_gamma: pole at nonpositive integer");
    if (z.real() < 0.5)
        return std::log(pi) - std::log(std::sin(pi * z)) - complex_log_gamma(1.0 - z);
    std::complex<double> base = z + (detail::kLanczosG - 0.5);
    return 0.5 * std::log(2.0 * pi) + (z - 0.5) * std::log(base) - base +
           std::log(detail::lanczos_sum(z));
}

/// Gamma(a)/Gamma(b) through log-gamma (stable when both arguments are large).
inline std::complex<double> gamma_ratio(std::complex<double> a, std::complex<double> b) {
    return std::exp(complex_log_gamma(a) - complex_log_gamma(b));
}

}  // namespace meixner
