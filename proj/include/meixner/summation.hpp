#pragma once

#include <cmath>
#include <complex>

namespace meixner {

/// Neumaier compensated accumulator. Summation order is fixed by the caller,
/// so results are deterministic across runs.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexKahanSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_;
    KahanSum im_;
};

inline double rel_error(std::complex<double> got, std::complex<double> want) {
    double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

inline double rel_or_abs_error(std::complex<double> got, std::complex<double> want) {
    double d = std::abs(got - want);
    double scale = std::abs(want);
    return scale > 1e-12 ? d / scale : d;
}

}  // namespace meixner
