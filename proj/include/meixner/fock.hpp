#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "meixner/measures.hpp"
#include "meixner/summation.hpp"

namespace meixner {

/// Truncated series value with a certified bound on the truncation error.
struct SeriesEval {
    Cplx value{0.0};
    unsigned terms_used = 0;
    double tail_bound = 0.0;
};

/// Finite truncation of an element sum f_n z^n of the Fock space indexed by
/// (eta, sigma); the squared norm is sum |f_n|^2 n! (sigma|-eta)_n.
struct FockElement {
    std::vector<Cplx> coeffs;
    double eta = 0.0;    // >= 0
    double sigma = 1.0;  // > 0

    FockElement() = default;
    FockElement(std::vector<Cplx> c, double e, double s) : coeffs(std::move(c)), eta(e), sigma(s) {
        if (eta < 0.0 || sigma <= 0.0)
            throw std::invalid_argument("FockElement: need eta >= 0, sigma > 0");
    }
};

/// Weight n! (sigma|-eta)_n.
inline double fock_weight(double eta, double sigma, unsigned n) {
    double w = 1.0;
    for (unsigned j = 0; j < n; ++j) w *= (j + 1.0) * (sigma + j * eta);
    return w;
}

inline Cplx fock_inner(const FockElement& phi, const FockElement& psi) {
    if (phi.eta != psi.eta || phi.sigma != psi.sigma)
        throw std::invalid_argument("fock_inner: mismatched (eta, sigma)");
    ComplexKahanSum acc;
    std::size_t n = std::min(phi.coeffs.size(), psi.coeffs.size());
    double w = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        acc.add(phi.coeffs[k] * std::conj(psi.coeffs[k]) * w);
        w *= (k + 1.0) * (phi.sigma + k * phi.eta);
    }
    return acc.value();
}

inline double fock_norm_sq(const FockElement& phi) {
    return fock_inner(phi, phi).real();
}

/// Reproducing kernel K(z,w) = sum (conj(z) w)^n / (n! (sigma|-eta)_n). The
/// weights grow like (n!)^2 eta^n (or sigma^n n! when eta = 0), so once the
/// term ratio falls below 1/2 the geometric majorant certifies the tail.
inline SeriesEval fock_kernel(double eta, double sigma, Cplx z, Cplx w, double tol = 1e-12) {
    Cplx q = std::conj(z) * w;
    ComplexKahanSum acc;
    Cplx term = 1.0;
    SeriesEval out;
    for (unsigned n = 0; n < 10000; ++n) {
        acc.add(term);
        double ratio = std::abs(q) / ((n + 1.0) * (sigma + n * eta));
        Cplx next = term * q / ((n + 1.0) * (sigma + n * eta));
        if (ratio < 0.5) {
            double tail = std::abs(next) / (1.0 - ratio);
            if (tail < tol * std::max(1.0, std::abs(acc.value()))) {
                out.value = acc.value();
                out.terms_used = n + 1;
                out.tail_bound = tail;
                return out;
            }
        }
        term = next;
    }
    throw std::runtime_error("fock_kernel: tolerance unreachable within term cap");
}

/// phi evaluated at z by its truncated expansion.
inline Cplx fock_eval(const FockElement& phi, Cplx z) {
    Cplx acc = 0.0;
    for (std::size_t n = phi.coeffs.size(); n-- > 0;) acc = acc * z + phi.coeffs[n];
    return acc;
}

}  // namespace meixner
