#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "meixner/exact.hpp"

namespace meixner {

enum class ShefferClass { Laguerre, MeixnerFirst, MeixnerSecond };

inline const char* class_name(ShefferClass c) {
    switch (c) {
        case ShefferClass::Laguerre: return "laguerre";
        case ShefferClass::MeixnerFirst: return "meixner1";
        case ShefferClass::MeixnerSecond: return "meixner2";
    }
    return "?";
}

inline ShefferClass class_from_name(const std::string& s) {
    if (s == "laguerre") return ShefferClass::Laguerre;
    if (s == "meixner1" || s == "meixner-first") return ShefferClass::MeixnerFirst;
    if (s == "meixner2" || s == "meixner-second") return ShefferClass::MeixnerSecond;
    throw std::invalid_argument("unknown class: '" + s + "'");
}

/// Validated parameter set for one of the three eta > 0 classes, with the
/// derived constants lambda = alpha + beta, eta = alpha*beta and the
/// recurrence shift ell (sigma/alpha for Laguerre and Meixner-1, 0 for
/// Meixner-2).
struct MeixnerParams {
    ShefferClass cls;
    GaussRational alpha;
    GaussRational beta;
    Rat sigma;

    GaussRational lambda;  // alpha + beta (real in all classes)
    GaussRational eta;     // alpha * beta (real > 0 in all classes)
    GaussRational ell;

    GaussRational sigma_g() const { return GaussRational{sigma}; }
    /// sigma/alpha; equals ell except in the Meixner-2 class where ell = 0.
    GaussRational sigma_over_alpha() const { return GaussRational{sigma} / alpha; }
};

inline MeixnerParams validate_params(const GaussRational& alpha, const GaussRational& beta,
                                     const Rat& sigma, ShefferClass cls) {
    if (sigma <= 0) throw std::invalid_argument("validate_params: sigma must be > 0");
    switch (cls) {
        case ShefferClass::Laguerre:
            if (!alpha.is_real() || !beta.is_real())
                throw std::invalid_argument("laguerre: alpha, beta must be real");
            if (alpha != beta) throw std::invalid_argument("laguerre: alpha must equal beta");
            if (alpha.re <= 0) throw std::invalid_argument("laguerre: alpha must be > 0");
            break;
        case ShefferClass::MeixnerFirst:
            if (!alpha.is_real() || !beta.is_real())
                throw std::invalid_argument("meixner1: alpha, beta must be real");
            if (!(alpha.re > beta.re && beta.re > 0))
                throw std::invalid_argument("meixner1: need alpha > beta > 0");
            break;
        case ShefferClass::MeixnerSecond:
            if (alpha.re < 0) throw std::invalid_argument("meixner2: Re(alpha) must be >= 0");
            if (alpha.im <= 0) throw std::invalid_argument("meixner2: Im(alpha) must be > 0");
            if (beta != alpha.conj())
                throw std::invalid_argument("meixner2: beta must be conj(alpha)");
            break;
    }
    MeixnerParams p;
    p.cls = cls;
    p.alpha = alpha;
    p.beta = beta;
    p.sigma = sigma;
    p.lambda = alpha + beta;
    p.eta = alpha * beta;
    p.ell = (cls == ShefferClass::MeixnerSecond) ? GaussRational{0}
                                                 : GaussRational{sigma} / alpha;
    return p;
}

/// Floating-point view of the parameters, for the numeric layer.
struct NumericParams {
    ShefferClass cls;
    std::complex<double> alpha;
    std::complex<double> beta;
    double sigma;
    double lambda;
    double eta;
    double ell;  // recurrence shift (real in all classes)

    std::complex<double> sigma_over_alpha() const { return sigma / alpha; }
};

inline NumericParams to_numeric(const MeixnerParams& p) {
    NumericParams n;
    n.cls = p.cls;
    n.alpha = p.alpha.to_complex();
    n.beta = p.beta.to_complex();
    n.sigma = to_double(p.sigma);
    n.lambda = to_double(p.lambda.re);
    n.eta = to_double(p.eta.re);
    n.ell = to_double(p.ell.re);
    return n;
}

// Reference parameter sets used throughout the checks.
inline MeixnerParams laguerre_ref() {
    return validate_params(GaussRational{1}, GaussRational{1}, Rat(1), ShefferClass::Laguerre);
}
inline MeixnerParams meixner1_ref() {
    return validate_params(GaussRational{2}, GaussRational{1}, Rat(2), ShefferClass::MeixnerFirst);
}
inline MeixnerParams meixner2_ref() {
    return validate_params(GaussRational{1, 1}, GaussRational{1, -1}, Rat(1),
                           ShefferClass::MeixnerSecond);
}

}  // namespace meixner
