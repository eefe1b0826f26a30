#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <stdexcept>
#include <vector>

#include "meixner/summation.hpp"

namespace meixner {

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    std::size_t max_nodes = 500000;  // integrand evaluations
};

/// Non-convergence within the node budget; carries the best estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, std::complex<double> best, double err)
        : std::runtime_error(what), best_(best), err_(err) {}
    std::complex<double> best_estimate() const { return best_; }
    double error_estimate() const { return err_; }

private:
    std::complex<double> best_;
    double err_;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1] (positive half).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGK15Weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void gk15_panel(F&& f, double a, double b, std::complex<double>& kronrod, double& err) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    ComplexKahanSum k15, g7;
    for (int i = 0; i < 8; ++i) {
        std::complex<double> fsum;
        if (i == 7) {
            fsum = f(c);
        } else {
            fsum = f(c - h * kGK15Nodes[i]) + f(c + h * kGK15Nodes[i]);
        }
        k15.add(kGK15Weights[i] * fsum);
        if (i % 2 == 1) g7.add(kG7Weights[i / 2] * fsum);
    }
    kronrod = h * k15.value();
    std::complex<double> gauss = h * g7.value();
    err = std::abs(kronrod - gauss);
}

struct Segment {
    double a, b, err;
    std::complex<double> val;
    bool operator<(const Segment& o) const { return err < o.err; }
};

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of a complex-valued function
/// over [a,b]: the worst segment is bisected until the summed error estimate
/// meets max(abs_tol, rel_tol * |I|, roundoff floor) or the node budget runs
/// out. The roundoff floor is scaled by the L1 mass of the panel values, so
/// integrals that cancel to zero terminate at machine level.
template <typename F>
std::complex<double> gk_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol,
                                 std::size_t max_nodes, double* err_out = nullptr) {
    if (a == b) return 0.0;
    std::priority_queue<detail::Segment> segs;
    std::complex<double> v;
    double e;
    detail::gk15_panel(f, a, b, v, e);
    segs.push({a, b, e, v});
    std::size_t nodes = 15;

    std::complex<double> total = v;
    double total_err = e;
    double magn = std::abs(v);
    while (total_err > std::max({abs_tol, rel_tol * std::abs(total), 1e-14 * magn})) {
        if (nodes + 30 > max_nodes || segs.empty()) {
            throw QuadratureError("gk_adaptive: node budget exhausted", total, total_err);
        }
        detail::Segment worst = segs.top();
        segs.pop();
        double mid = 0.5 * (worst.a + worst.b);
        // fall back to accepting a segment that can no longer be split
        if (mid <= worst.a || mid >= worst.b) {
            total_err -= worst.err;
            continue;
        }
        std::complex<double> v1, v2;
        double e1, e2;
        detail::gk15_panel(f, worst.a, mid, v1, e1);
        detail::gk15_panel(f, mid, worst.b, v2, e2);
        nodes += 30;
        total += v1 + v2 - worst.val;
        total_err += e1 + e2 - worst.err;
        magn += std::abs(v1) + std::abs(v2) - std::abs(worst.val);
        segs.push({worst.a, mid, e1, v1});
        segs.push({mid, worst.b, e2, v2});
    }
    if (err_out) *err_out = total_err;
    return total;
}

/// Real-valued convenience wrapper.
template <typename F>
double gk_adaptive_real(F&& f, double a, double b, double abs_tol, double rel_tol,
                        std::size_t max_nodes) {
    auto g = [&f](double x) { return std::complex<double>(f(x), 0.0); };
    return gk_adaptive(g, a, b, abs_tol, rel_tol, max_nodes).real();
}

/// Integral over [start, infinity): integrates [start, start+len],
/// [start+len, start+2 len], ... with doubling lengths until two consecutive
/// pieces contribute less than the absolute target. The integrand must decay
/// (at least exponentially beyond the bulk) for the extension to certify.
template <typename F>
std::complex<double> integrate_to_infinity(F&& f, double start, double len, double abs_tol,
                                           double rel_tol, std::size_t max_nodes,
                                           double* err_out = nullptr) {
    ComplexKahanSum acc;
    double err_acc = 0.0;
    double magn = 0.0;
    double a = start;
    int quiet = 0;
    for (int piece = 0; piece < 64; ++piece) {
        double b = a + len;
        double perr = 0.0;
        std::complex<double> v =
            gk_adaptive(f, a, b, 0.25 * abs_tol, 0.5 * rel_tol, max_nodes, &perr);
        acc.add(v);
        err_acc += perr;
        magn += std::abs(v);
        double target =
            std::max({abs_tol, rel_tol * std::abs(acc.value()), 1e-13 * magn});
        if (std::abs(v) < 0.25 * target)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 2) {
            if (err_out) *err_out = err_acc + std::abs(v);
            return acc.value();
        }
        a = b;
        len *= 2.0;
    }
    throw QuadratureError("integrate_to_infinity: no tail decay detected", acc.value(), err_acc);
}

// ---- generalized Gauss-Laguerre ------------------------------------------

/// Nodes and weights for int_0^infty x^alf e^{-x} f(x) dx ~ sum w_i f(x_i),
/// computed by Newton iteration on the generalized Laguerre recurrence.
/// Requires alf > -1.
inline void gauss_laguerre(int n, double alf, std::vector<double>& x, std::vector<double>& w) {
    if (!(alf > -1.0)) throw std::domain_error("gauss_laguerre: alf must be > -1");
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = (1.0 + alf) * (3.0 + 0.92 * alf) / (1.0 + 2.4 * n + 1.8 * alf);
        } else if (i == 1) {
            z += (15.0 + 6.25 * alf) / (1.0 + 0.9 * alf + 2.5 * n);
        } else {
            double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alf / (1.0 + 3.5 * ai)) *
                 (z - x[i - 2]) / (1.0 + 0.3 * alf);
        }
        double pp = 0.0, p2 = 0.0;
        bool converged = false;
        for (int its = 0; its < 100; ++its) {
            double p1 = 1.0;
            p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2 * j + 1 + alf - z) * p2 - (j + alf) * p3) / (j + 1);
            }
            pp = (n * p1 - (n + alf) * p2) / z;
            double z1 = z;
            z = z1 - p1 / pp;
            if (converged) break;  // one polishing step past convergence
            converged = std::abs(z - z1) <= 1e-14 * std::abs(z);
        }
        x[i] = z;
        w[i] = -std::exp(std::lgamma(alf + n) - std::lgamma(static_cast<double>(n))) /
               (pp * n * p2);
    }
}

/// int_0^infty x^alf e^{-x} f(x) dx by Gauss-Laguerre rules of doubling order
/// until two estimates agree. The settle test is scaled by the term-magnitude
/// sum as well as the value, so integrals that cancel to (near) zero still
/// converge at machine level.
template <typename F>
std::complex<double> gauss_laguerre_integrate(F&& f, double alf, double abs_tol, double rel_tol,
                                              std::size_t max_nodes) {
    std::complex<double> prev{0.0, 0.0};
    bool have_prev = false;
    std::size_t used = 0;
    for (int n = 24; n <= 192; n *= 2) {
        std::vector<double> x, w;
        gauss_laguerre(n, alf, x, w);
        used += static_cast<std::size_t>(n);
        if (used > max_nodes)
            throw QuadratureError("gauss_laguerre_integrate: node budget exhausted", prev, 1.0);
        ComplexKahanSum acc;
        double magn = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> term = w[i] * f(x[i]);
            acc.add(term);
            magn += std::abs(term);
        }
        std::complex<double> cur = acc.value();
        // node/weight roundoff grows with the order, so cancellation-limited
        // integrals settle against the L1-mass floor rather than rel_tol
        double target = std::max({abs_tol, rel_tol * std::abs(cur), 1e-12 * magn});
        if (have_prev && std::abs(cur - prev) <= target) return cur;
        prev = cur;
        have_prev = true;
    }
    throw QuadratureError("gauss_laguerre_integrate: did not settle", prev, 1.0);
}

}  // namespace meixner
