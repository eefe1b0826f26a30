#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace meixner {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return static_cast<double>(r); }

/// Complex scalar with arbitrary-precision rational components.
/// All arithmetic is exact; denominators are kept canonical (reduced, positive)
/// by the underlying rational type.
struct GaussRational {
    Rat re{0};
    Rat im{0};

    GaussRational() = default;
    GaussRational(Rat r) : re(std::move(r)) {}
    GaussRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long r) : re(r) {}
    GaussRational(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rat n = b.norm2();
        if (n == 0) throw std::domain_error("GaussRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussRational& operator+=(const GaussRational& b) { *this = *this + b; return *this; }
    GaussRational& operator-=(const GaussRational& b) { *this = *this - b; return *this; }
    GaussRational& operator*=(const GaussRational& b) { *this = *this * b; return *this; }
    GaussRational& operator/=(const GaussRational& b) { *this = *this / b; return *this; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

/// z^n with the convention z^0 = 1 (including 0^0 = 1).
inline GaussRational pow_n(const GaussRational& z, unsigned n) {
    GaussRational acc{1};
    GaussRational base = z;
    unsigned e = n;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline Int factorial(unsigned n) {
    Int f{1};
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r{1};
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// ---- printing ----------------------------------------------------------

inline std::string to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Canonical form "a/b+c/di"; pure-real "a/b", pure-imaginary "c/di".
inline std::string to_string(const GaussRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::string im_part = to_string(z.im < 0 ? Rat(-z.im) : z.im) + "i";
    if (z.re == 0) return (z.im < 0 ? "-" : "") + im_part;
    return to_string(z.re) + (z.im < 0 ? "-" : "+") + im_part;
}

// ---- parsing -----------------------------------------------------------

namespace detail {

inline bool parse_uint_digits(std::string_view s, std::size_t& pos, Int& out) {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) return false;
    out = Int(std::string(s.substr(start, pos - start)));
    return true;
}

/// nat ('/' nat)?  The denominator must be nonzero.
inline bool parse_unsigned_rat(std::string_view s, std::size_t& pos, Rat& out) {
    Int num;
    if (!parse_uint_digits(s, pos, num)) return false;
    if (pos < s.size() && s[pos] == '/') {
        std::size_t save = pos;
        ++pos;
        Int den;
        if (!parse_uint_digits(s, pos, den) || den == 0) {
            pos = save;  // "3/" without digits: the '/' is not part of the literal
            out = Rat(num);
            return true;
        }
        out = Rat(num, den);
        return true;
    }
    out = Rat(num);
    return true;
}

}  // namespace detail

/// Parses "p/q", "-p/q", "p/q+r/si", "-p/q-r/si", "3i", "-1/3i", ...
/// Whole-string match required.
inline GaussRational parse_gauss_rational(std::string_view s) {
    std::size_t pos = 0;
    auto fail = [&]() -> GaussRational {
        throw std::invalid_argument("not a complex rational literal: '" + std::string(s) + "'");
    };

    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = (s[pos++] == '-');
    Rat first;
    if (!detail::parse_unsigned_rat(s, pos, first)) return fail();
    if (neg) first = -first;

    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        if (pos != s.size()) return fail();
        return GaussRational{Rat(0), first};
    }
    if (pos == s.size()) return GaussRational{first};

    if (s[pos] != '+' && s[pos] != '-') return fail();
    bool imneg = (s[pos++] == '-');
    Rat second;
    if (!detail::parse_unsigned_rat(s, pos, second)) return fail();
    if (pos >= s.size() || s[pos] != 'i') return fail();
    ++pos;
    if (pos != s.size()) return fail();
    if (imneg) second = -second;
    return GaussRational{first, second};
}

inline Rat parse_rational(std::string_view s) {
    GaussRational g = parse_gauss_rational(s);
    if (!g.is_real()) throw std::invalid_argument("expected a real rational: '" + std::string(s) + "'");
    return g.re;
}

}  // namespace meixner
