#pragma once

#include <complex>
#include <random>

#include "meixner/exact.hpp"

namespace testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed5eedULL) {
    return std::mt19937_64(seed);
}

/// Small random rational with denominator in 1..6.
inline meixner::Rat random_rat(std::mt19937_64& rng, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 6);
    return meixner::Rat(num(rng), den(rng));
}

inline meixner::Rat random_positive_rat(std::mt19937_64& rng, int hi = 9) {
    std::uniform_int_distribution<int> num(1, hi);
    std::uniform_int_distribution<int> den(1, 6);
    return meixner::Rat(num(rng), den(rng));
}

inline meixner::GaussRational random_gauss(std::mt19937_64& rng) {
    return {random_rat(rng), random_rat(rng)};
}

inline meixner::GaussRational random_nonzero_gauss(std::mt19937_64& rng) {
    for (;;) {
        auto g = random_gauss(rng);
        if (!g.is_zero()) return g;
    }
}

inline bool close(std::complex<double> a, std::complex<double> b, double rel,
                  double abs_floor = 1e-12) {
    double d = std::abs(a - b);
    return d <= std::max(abs_floor, rel * std::max(std::abs(a), std::abs(b)));
}

}  // namespace testutil
