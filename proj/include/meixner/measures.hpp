#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "meixner/bessel.hpp"
#include "meixner/combinat.hpp"
#include "meixner/gammafn.hpp"
#include "meixner/params.hpp"
#include "meixner/quadrature.hpp"
#include "meixner/summation.hpp"

namespace meixner {

using Cplx = std::complex<double>;

/// z^n by repeated multiplication (0^0 = 1; avoids std::pow's NaN at 0^0).
inline Cplx pow_int(Cplx z, unsigned n) {
    Cplx acc = 1.0;
    Cplx base = z;
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

/// (z|h)_n over doubles.
inline Cplx genfact_num(Cplx z, Cplx h, unsigned n) {
    Cplx acc = 1.0;
    for (unsigned j = 0; j < n; ++j) acc *= (z - static_cast<double>(j) * h);
    return acc;
}

/// Rising factorial (x)^(n).
inline Cplx rising_num(Cplx x, unsigned n) { return genfact_num(x, -1.0, n); }

/// ||s_n||^2 = n! (sigma|-eta)_n, exactly.
inline GaussRational sheffer_norm_sq(const MeixnerParams& p, unsigned n) {
    return GaussRational{Rat(factorial(n))} * genfact(p.sigma_g(), -p.eta, n);
}

/// Values s_0(x)..s_N(x) by the recurrence (all classes have real recurrence
/// coefficients, so the values are real for real x).
inline std::vector<double> sheffer_values(const NumericParams& p, unsigned N, double x) {
    std::vector<double> s(N + 1);
    s[0] = 1.0;
    if (N == 0) return s;
    s[1] = x - p.ell;
    for (unsigned n = 1; n < N; ++n)
        s[n + 1] = (x - p.lambda * n - p.ell) * s[n] - (p.sigma * n + p.eta * n * (n - 1.0)) * s[n - 1];
    return s;
}

// ---------------------------------------------------------------------------
// Measure descriptors
// ---------------------------------------------------------------------------

/// Tagged measure descriptor. The parameter zeta generalizes sigma; its
/// admissible domain depends on the measure (all of C for the negative
/// binomial and Poisson cases, Re(zeta) > 0 for the gamma case, and the
/// half-plane/sector condition for the Meixner case).
struct MeasureSpec {
    enum class Tag { Gamma, NegBinomial, Meixner, PoissonComplex, FockLambda };

    Tag tag;
    Cplx alpha{0.0};
    Cplx beta{0.0};
    Cplx zeta{0.0};
    double fock_eta = 0.0;
    double fock_sigma = 0.0;

    double eta() const { return (alpha * beta).real(); }
};

inline bool zeta_admissible(MeasureSpec::Tag tag, Cplx alpha, Cplx zeta) {
    switch (tag) {
        case MeasureSpec::Tag::NegBinomial:
        case MeasureSpec::Tag::PoissonComplex:
        case MeasureSpec::Tag::FockLambda: return true;
        case MeasureSpec::Tag::Gamma: return zeta.real() > 0.0;
        case MeasureSpec::Tag::Meixner:
            if (zeta.real() <= 0.0) return false;
            if (alpha.real() == 0.0) return true;
            return std::abs(zeta.imag()) < zeta.real() * alpha.imag() / alpha.real();
    }
    return false;
}

inline MeasureSpec gamma_measure(double alpha, Cplx zeta) {
    if (alpha <= 0.0) throw std::invalid_argument("gamma_measure: alpha must be > 0");
    if (!zeta_admissible(MeasureSpec::Tag::Gamma, alpha, zeta))
        throw std::domain_error("gamma_measure: zeta outside the admissible domain");
    return {MeasureSpec::Tag::Gamma, alpha, alpha, zeta};
}

inline MeasureSpec negbinomial_measure(double alpha, double beta, Cplx zeta) {
    if (!(alpha > beta && beta > 0.0))
        throw std::invalid_argument("negbinomial_measure: need alpha > beta > 0");
    return {MeasureSpec::Tag::NegBinomial, alpha, beta, zeta};
}

inline MeasureSpec meixner_measure(Cplx alpha, Cplx zeta) {
    if (alpha.real() < 0.0 || alpha.imag() <= 0.0)
        throw std::invalid_argument("meixner_measure: need Re(alpha) >= 0, Im(alpha) > 0");
    if (!zeta_admissible(MeasureSpec::Tag::Meixner, alpha, zeta))
        throw std::domain_error("meixner_measure: zeta outside the admissible domain");
    return {MeasureSpec::Tag::Meixner, alpha, std::conj(alpha), zeta};
}

inline MeasureSpec poisson_measure(Cplx zeta) {
    return {MeasureSpec::Tag::PoissonComplex, 0.0, 0.0, zeta};
}

inline MeasureSpec fock_lambda_measure(double eta, double sigma) {
    if (eta <= 0.0 || sigma <= 0.0)
        throw std::invalid_argument("fock_lambda_measure: eta, sigma must be > 0");
    MeasureSpec m{MeasureSpec::Tag::FockLambda};
    m.fock_eta = eta;
    m.fock_sigma = sigma;
    return m;
}

/// Orthogonality measure of a parameter set, with sigma replaced by zeta.
inline MeasureSpec measure_of(const NumericParams& p, Cplx zeta) {
    switch (p.cls) {
        case ShefferClass::Laguerre: return gamma_measure(p.alpha.real(), zeta);
        case ShefferClass::MeixnerFirst:
            return negbinomial_measure(p.alpha.real(), p.beta.real(), zeta);
        case ShefferClass::MeixnerSecond: return meixner_measure(p.alpha, zeta);
    }
    throw std::logic_error("measure_of: bad class");
}

inline MeasureSpec measure_of(const NumericParams& p) { return measure_of(p, p.sigma); }

// ---------------------------------------------------------------------------
// Densities / mass functions
// ---------------------------------------------------------------------------

namespace detail {

inline Cplx pow_positive_base(double base, Cplx expo) {
    // principal power of a positive real base
    return std::exp(expo * std::log(base));
}

/// Evaluated on the log scale: the exponential prefactor grows in x while the
/// gamma factors decay faster, so the direct product overflows long before
/// the density itself leaves double range. The argument may be complex (the
/// formula continues analytically off the real line).
inline Cplx meixner_density(Cplx alpha, Cplx zeta, Cplx x) {
    using std::numbers::pi;
    double ia = alpha.imag();
    double eta = std::norm(alpha);
    double phi = pi / 2.0 - std::arg(alpha);
    Cplx beta = std::conj(alpha);
    const Cplx i{0.0, 1.0};
    Cplx lg1 = complex_log_gamma(i * x / (2.0 * ia) + i * zeta * beta / (2.0 * eta * ia));
    Cplx lg2 = complex_log_gamma(-i * x / (2.0 * ia) - i * zeta * alpha / (2.0 * eta * ia));
    Cplx s = zeta / eta;
    Cplx logc = s * std::log(2.0 * std::cos(phi)) - complex_log_gamma(s) +
                phi * alpha.real() / ia * s - std::log(4.0 * ia * pi);
    Cplx total = logc + phi * x / ia + lg1 + lg2;
    if (total.real() < -700.0) return 0.0;
    return std::exp(total);
}

}  // namespace detail

/// Pointwise density (or mass at an atom) of the measure. For the negative
/// binomial and Poisson measures the point must sit on the lattice support.
inline Cplx density(const MeasureSpec& m, double x) {
    switch (m.tag) {
        case MeasureSpec::Tag::Gamma: {
            if (x <= 0.0) throw std::domain_error("gamma density: x must be > 0");
            double a = m.alpha.real();
            Cplx s = m.zeta / (a * a);
            return detail::pow_positive_base(x, s - 1.0) * std::exp(-x / a) /
                   (complex_gamma(s) * detail::pow_positive_base(a, s));
        }
        case MeasureSpec::Tag::NegBinomial: {
            double a = m.alpha.real(), b = m.beta.real();
            double step = a - b;
            double nd = x / step;
            double nr = std::round(nd);
            if (nr < 0.0 || std::abs(nd - nr) > 1e-9 * (1.0 + std::abs(nd)))
                throw std::domain_error("negbinomial mass: x not on (alpha-beta) N0");
            unsigned n = static_cast<unsigned>(nr);
            Cplx s = m.zeta / (a * b);
            Cplx w = detail::pow_positive_base(1.0 - b / a, s);
            for (unsigned j = 0; j < n; ++j) w *= (b / a) * (s + static_cast<double>(j)) / (j + 1.0);
            return w;
        }
        case MeasureSpec::Tag::Meixner: return detail::meixner_density(m.alpha, m.zeta, x);
        case MeasureSpec::Tag::PoissonComplex: {
            double nr = std::round(x);
            if (nr < 0.0 || std::abs(x - nr) > 1e-9)
                throw std::domain_error("poisson mass: x not in N0");
            unsigned n = static_cast<unsigned>(nr);
            Cplx w = std::exp(-m.zeta);
            for (unsigned j = 0; j < n; ++j) w *= m.zeta / (j + 1.0);
            return w;
        }
        case MeasureSpec::Tag::FockLambda:
            throw std::invalid_argument("density: FockLambda lives on C; use fock_lambda_density");
    }
    throw std::logic_error("density: bad tag");
}

/// Radial density of lambda_{eta,sigma} through the Bessel closed form.
inline double fock_lambda_density(double eta, double sigma, double radius) {
    using std::numbers::pi;
    if (radius <= 0.0) throw std::domain_error("fock_lambda_density: need |z| > 0");
    double soe = sigma / eta;
    return 2.0 * std::pow(eta, -0.5 * (1.0 + soe)) / (pi * std::tgamma(soe)) *
           std::pow(radius, soe - 1.0) * bessel_k(1.0 - soe, 2.0 * radius / std::sqrt(eta));
}

/// The same density through the gamma mixture of complex Gaussians.
inline double fock_lambda_density_mixture(double eta, double sigma, double radius,
                                          const QuadConfig& cfg = {}) {
    using std::numbers::pi;
    double soe = sigma / eta;
    double r2 = radius * radius;
    auto integrand = [&](double r) {
        return std::exp(-r2 / r - r / eta) * std::pow(r, soe - 2.0);
    };
    double bulk = std::max(radius * std::sqrt(eta), eta);
    double I = integrate_to_infinity([&](double r) { return Cplx(integrand(r), 0.0); }, 0.0,
                                     2.0 * bulk, cfg.abs_tol, cfg.rel_tol, cfg.max_nodes)
                   .real();
    return I * std::pow(eta, -soe) / (pi * std::tgamma(soe));
}

// ---------------------------------------------------------------------------
// Integration against the measures
// ---------------------------------------------------------------------------

/// e^{-zeta} sum_k zeta^k f(k) / k!, truncated once the running terms stay
/// below the absolute target for several consecutive k past the bulk k ~ |zeta|.
inline Cplx poisson_expect(Cplx zeta, const std::function<Cplx(unsigned)>& f,
                           const QuadConfig& cfg = {}) {
    ComplexKahanSum acc;
    Cplx weight = std::exp(-zeta);
    double magn = 0.0;
    // truncation rule: past the bulk k ~ 2|zeta| the weights decay faster
    // than geometrically; stop after 6 consecutive terms below the target
    double bulk = 2.0 * std::abs(zeta) + 16.0;
    int quiet = 0;
    std::size_t cap = std::max<std::size_t>(64, std::min<std::size_t>(cfg.max_nodes, 100000));
    for (unsigned k = 0; k < cap; ++k) {
        Cplx term = weight * f(k);
        acc.add(term);
        double mag = std::abs(term);
        magn += mag;
        if (!(mag < 1e120))
            throw QuadratureError("poisson_expect: divergent summand growth", acc.value(), mag);
        if (k > bulk) {
            double target = std::max(
                {cfg.abs_tol, cfg.rel_tol * std::abs(acc.value()), 1e-13 * magn});
            quiet = (mag < 0.25 * target) ? quiet + 1 : 0;
            if (quiet >= 6) return acc.value();
        }
        weight *= zeta / (k + 1.0);
    }
    throw QuadratureError("poisson_expect: term cap reached", acc.value(), 1.0);
}

namespace detail {

inline Cplx integrate_gamma(const MeasureSpec& m, const std::function<Cplx(double)>& f,
                            const QuadConfig& cfg) {
    double a = m.alpha.real();
    Cplx s = m.zeta / (a * a);
    if (m.zeta.imag() == 0.0) {
        // Laguerre-type rule matched to the x^{s-1} e^{-x/a} weight
        double sr = s.real();
        auto g = [&](double t) { return f(a * t); };
        return gauss_laguerre_integrate(g, sr - 1.0, cfg.abs_tol, cfg.rel_tol, cfg.max_nodes) /
               std::tgamma(sr);
    }
    // Complex zeta: substitute x = t^2, which removes the endpoint singularity
    // (Re(s) > 1/2 on the domains in play), then extend until the tail dies.
    Cplx norm = 1.0 / (complex_gamma(s) * pow_positive_base(a, s));
    auto g = [&](double t) {
        double x = t * t;
        return 2.0 * t * f(x) * pow_positive_base(x, s - 1.0) * std::exp(-x / a);
    };
    double bulk = std::sqrt(a * (4.0 + std::abs(s)));
    return norm *
           integrate_to_infinity(g, 0.0, 2.0 * bulk, cfg.abs_tol, cfg.rel_tol, cfg.max_nodes);
}

inline Cplx integrate_negbinomial(const MeasureSpec& m, const std::function<Cplx(double)>& f,
                                  const QuadConfig& cfg) {
    double a = m.alpha.real(), b = m.beta.real();
    double q = b / a;
    double step = a - b;
    Cplx s = m.zeta / (a * b);
    Cplx w = pow_positive_base(1.0 - q, s);
    ComplexKahanSum acc;
    double magn = 0.0;
    double qbar = 0.5 * (1.0 + q);
    // truncation rule: once the mass ratio q (s+n)/(n+1) has settled below
    // qbar < 1, the geometric majorant certifies the remainder; the window of
    // 6 quiet terms and the index floor guard integrands whose support
    // starts late on the lattice
    double n_min = 16.0 + 2.0 * std::abs(s) + 8.0 / (1.0 - q);
    int quiet = 0;
    std::size_t cap = std::max<std::size_t>(64, std::min<std::size_t>(cfg.max_nodes, 200000));
    for (unsigned n = 0; n < cap; ++n) {
        Cplx term = w * f(step * n);
        acc.add(term);
        double mag = std::abs(term);
        magn += mag;
        if (!(mag < 1e120))
            throw QuadratureError("negbinomial sum: divergent growth", acc.value(), mag);
        bool ratio_settled = q * (std::abs(s) + n) / (n + 1.0) < qbar;
        if (ratio_settled && n > n_min) {
            double target = std::max(
                {cfg.abs_tol, cfg.rel_tol * std::abs(acc.value()), 1e-13 * magn});
            quiet = (mag / (1.0 - qbar) < 0.25 * target) ? quiet + 1 : 0;
            if (quiet >= 6) return acc.value();
        }
        w *= q * (s + static_cast<double>(n)) / (n + 1.0);
    }
    throw QuadratureError("negbinomial sum: term cap reached", acc.value(), 1.0);
}

inline Cplx integrate_meixner(const MeasureSpec& m, const std::function<Cplx(double)>& f,
                              const QuadConfig& cfg) {
    // Truncation rule: the density decays like exp(-Arg(alpha)|x|/Im(alpha))
    // times a fixed power, so pieces of doubling length are added on both
    // sides until their contribution falls below the absolute target.
    double ia = m.alpha.imag();
    double len0 = 8.0 * (1.0 + std::abs(m.zeta) / m.eta()) * std::max(ia, 1.0 / ia);
    auto right = [&](double x) { return f(x) * meixner_density(m.alpha, m.zeta, x); };
    auto left = [&](double x) { return f(-x) * meixner_density(m.alpha, m.zeta, -x); };
    Cplx I = integrate_to_infinity(right, 0.0, len0, 0.5 * cfg.abs_tol, cfg.rel_tol,
                                   cfg.max_nodes);
    I += integrate_to_infinity(left, 0.0, len0, 0.5 * cfg.abs_tol, cfg.rel_tol, cfg.max_nodes);
    return I;
}

}  // namespace detail

/// Integral of f against the measure, within the configured tolerance.
inline Cplx integrate(const MeasureSpec& m, const std::function<Cplx(double)>& f,
                      const QuadConfig& cfg = {}) {
    switch (m.tag) {
        case MeasureSpec::Tag::Gamma: return detail::integrate_gamma(m, f, cfg);
        case MeasureSpec::Tag::NegBinomial: return detail::integrate_negbinomial(m, f, cfg);
        case MeasureSpec::Tag::Meixner: return detail::integrate_meixner(m, f, cfg);
        case MeasureSpec::Tag::PoissonComplex:
            return poisson_expect(m.zeta, [&](unsigned k) { return f(static_cast<double>(k)); },
                                  cfg);
        case MeasureSpec::Tag::FockLambda:
            throw std::invalid_argument("integrate: use fock_integrate for FockLambda");
    }
    throw std::logic_error("integrate: bad tag");
}

/// Radial moment: int |z|^{2n} dlambda_{eta,sigma} = 2 pi int_0^inf
/// s^{2n+1} Lambda(s) ds, with Lambda from the Bessel closed form.
inline double fock_radial_moment(double eta, double sigma, unsigned n,
                                 const QuadConfig& cfg = {}) {
    using std::numbers::pi;
    auto g = [&](double s) {
        return Cplx(2.0 * pi * std::pow(s, 2.0 * n + 1.0) * fock_lambda_density(eta, sigma, s),
                    0.0);
    };
    double bulk = std::sqrt(eta) * (2.0 + n + sigma / eta);
    return integrate_to_infinity(g, 0.0, bulk, cfg.abs_tol, cfg.rel_tol, cfg.max_nodes).real();
}

/// int_C f dlambda_{eta,sigma} via polar coordinates; the angular integral is
/// a trapezoid rule with `angular_points` nodes (exact for trigonometric
/// polynomials of lower degree).
inline Cplx fock_integrate(double eta, double sigma, const std::function<Cplx(Cplx)>& f,
                           unsigned angular_points = 64, const QuadConfig& cfg = {}) {
    using std::numbers::pi;
    auto radial = [&](double s) {
        ComplexKahanSum ang;
        for (unsigned j = 0; j < angular_points; ++j) {
            double th = 2.0 * pi * j / angular_points;
            ang.add(f(std::polar(s, th)));
        }
        return ang.value() * (2.0 * pi / angular_points) * s *
               fock_lambda_density(eta, sigma, s);
    };
    double bulk = std::sqrt(eta) * (4.0 + sigma / eta);
    return integrate_to_infinity(radial, 0.0, bulk, cfg.abs_tol, cfg.rel_tol, cfg.max_nodes);
}

// ---------------------------------------------------------------------------
// Named checks
// ---------------------------------------------------------------------------

struct OrthogonalityResult {
    Cplx value;              // quadrature of s_m s_n
    GaussRational expected;  // delta_{mn} n! (sigma|-eta)_n
};

inline OrthogonalityResult orthogonality_check(const MeixnerParams& params, unsigned m,
                                               unsigned n, const QuadConfig& cfg = {}) {
    NumericParams np = to_numeric(params);
    unsigned N = std::max(m, n);
    auto f = [&](double x) {
        auto s = sheffer_values(np, N, x);
        return Cplx(s[m] * s[n], 0.0);
    };
    OrthogonalityResult r;
    r.value = integrate(measure_of(np), f, cfg);
    r.expected = (m == n) ? sheffer_norm_sq(params, n) : GaussRational{0};
    return r;
}

struct MellinResult {
    double lhs;  // (f1 * f2)(r) by the convolution integral
    double rhs;  // pi sigma Lambda_{sigma,sigma} at |z| = sqrt(r)
};

/// Mellin-convolution identity: pi sigma Lambda_{sigma,sigma}(z) = psi(|z|^2)
/// with psi = f1 * f2, f1(r) = e^{-r}, f2(r) = e^{-r/sigma}.
inline MellinResult mellin_convolution_check(double sigma, double r, const QuadConfig& cfg = {}) {
    using std::numbers::pi;
    if (sigma <= 0.0 || r <= 0.0)
        throw std::domain_error("mellin_convolution_check: need sigma > 0, r > 0");
    // psi(r) = int_0^inf e^{-r/t} e^{-t/sigma} dt/t, on the log scale t = e^u
    auto g = [&](double u) {
        double t = std::exp(u);
        return Cplx(std::exp(-r / t - t / sigma), 0.0);
    };
    double lhs =
        (integrate_to_infinity(g, 0.0, 4.0, 0.5 * cfg.abs_tol, cfg.rel_tol, cfg.max_nodes) +
         integrate_to_infinity([&](double u) { return g(-u); }, 0.0, 4.0, 0.5 * cfg.abs_tol,
                               cfg.rel_tol, cfg.max_nodes))
            .real();
    double rhs = pi * sigma * fock_lambda_density(sigma, sigma, std::sqrt(r));
    return {lhs, rhs};
}

}  // namespace meixner
