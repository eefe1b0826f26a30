#pragma once

#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "meixner/exact.hpp"

namespace meixner {

namespace detail {

/// Triangular memo table grown on demand. Shared across threads behind a
/// mutex; served values are copies, so callers observe pure-function
/// semantics.
class StirlingTable {
public:
    enum class Kind { FirstSigned, Second, Lah };

    explicit StirlingTable(Kind kind) : kind_(kind) { rows_.push_back({Int(1)}); }

    Int at(unsigned n, unsigned k) {
        std::scoped_lock lock(mu_);
        grow(n);
        if (k > n) throw std::domain_error("stirling/lah: k > n");
        return rows_[n][k];
    }

private:
    void grow(unsigned n) {
        while (rows_.size() <= n) {
            unsigned m = static_cast<unsigned>(rows_.size());  // new row index
            std::vector<Int> row(m + 1);
            const std::vector<Int>& prev = rows_[m - 1];
            row[0] = 0;
            for (unsigned k = 1; k <= m; ++k) {
                const Int& upper_left = prev[k - 1];
                Int up = (k <= m - 1) ? prev[k] : Int(0);
                switch (kind_) {
                    case Kind::Second: row[k] = upper_left + Int(k) * up; break;
                    case Kind::FirstSigned: row[k] = upper_left - Int(m - 1) * up; break;
                    case Kind::Lah: row[k] = upper_left + Int(m - 1 + k) * up; break;
                }
            }
            rows_.push_back(std::move(row));
        }
    }

    Kind kind_;
    std::vector<std::vector<Int>> rows_;
    std::mutex mu_;
};

inline StirlingTable& stirling2_table() {
    static StirlingTable t(StirlingTable::Kind::Second);
    return t;
}
inline StirlingTable& stirling1_table() {
    static StirlingTable t(StirlingTable::Kind::FirstSigned);
    return t;
}
inline StirlingTable& lah_table() {
    static StirlingTable t(StirlingTable::Kind::Lah);
    return t;
}

inline std::optional<std::pair<unsigned, unsigned>>& stirling2_fault() {
    static std::optional<std::pair<unsigned, unsigned>> f;
    return f;
}

}  // namespace detail

/// S(n,k): coefficient of (z)_k in z^n.
inline Int stirling2(unsigned n, unsigned k) {
    Int v = detail::stirling2_table().at(n, k);
    if (auto& f = detail::stirling2_fault(); f && f->first == n && f->second == k) v += 1;
    return v;
}

/// s(n,k), signed: coefficient of z^k in (z)_n.
inline Int stirling1(unsigned n, unsigned k) { return detail::stirling1_table().at(n, k); }

/// Unsigned Lah number L(n,k) = C(n-1,k-1) n!/k!, defined for 1 <= k <= n
/// (and L(0,0) = 1).
inline Int lah(unsigned n, unsigned k) {
    if (n >= 1 && k == 0) throw std::domain_error("lah: k = 0 with n >= 1");
    return detail::lah_table().at(n, k);
}

/// Generalized factorial (z|h)_n = z(z-h)...(z-(n-1)h), with (z|h)_0 = 1.
inline GaussRational genfact(const GaussRational& z, const GaussRational& h, unsigned n) {
    GaussRational acc{1};
    GaussRational term = z;
    for (unsigned j = 0; j < n; ++j) {
        acc *= term;
        term -= h;
    }
    return acc;
}

/// Generalized Stirling number S(n,k;h,r): coefficient of (z|-h)_k in the
/// expansion of (z+r|h)_n. Computed through the Lah-sum formula
///   S(n,0;h,r) = (r|h)_n,
///   S(n,k;h,r) = sum_{j=0}^{n-k} C(n,j) (-h)^{n-j-k} L(n-j,k) (r|h)_j.
inline GaussRational gen_stirling(unsigned n, unsigned k, const GaussRational& h,
                                  const GaussRational& r) {
    if (k > n) throw std::domain_error("gen_stirling: k > n");
    if (k == 0) return genfact(r, h, n);
    GaussRational sum{0};
    for (unsigned j = 0; j + k <= n; ++j) {
        GaussRational term{Rat(binomial(n, j))};
        term *= pow_n(-h, n - j - k);
        term *= GaussRational{Rat(lah(n - j, k))};
        term *= genfact(r, h, j);
        sum += term;
    }
    return sum;
}

/// Rising factorial (x)^(n) = x(x+1)...(x+n-1) = (x|-1)_n.
inline GaussRational rising(const GaussRational& x, unsigned n) {
    return genfact(x, GaussRational{-1}, n);
}

namespace combinat_testing {

/// Fault-injection hook for the verification harness: the served value of
/// S(n,k) is offset by one until cleared. Not for normal use.
inline void corrupt_stirling2(unsigned n, unsigned k) { detail::stirling2_fault() = {n, k}; }
inline void clear_corruption() { detail::stirling2_fault().reset(); }

}  // namespace combinat_testing

}  // namespace meixner
