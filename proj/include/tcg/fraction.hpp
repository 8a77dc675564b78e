#ifndef TCG_FRACTION_HPP
#define TCG_FRACTION_HPP

#include <cstdint>

#include "tcg/rational.hpp"

namespace tcg {

// Overflow signal for the 128-bit fraction fast path. Callers redo the
// offending computation with Rational; results are identical either way.
struct FracOverflow {};

namespace detail {

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

// Exact fraction over signed 128-bit integers, kept reduced with positive
// denominator. Used in the hot loops (equilibrium scans) where Rational's
// allocation cost would dominate. Every overflow is detected and raised.
struct Frac {
    __int128 num = 0;
    __int128 den = 1;

    Frac() = default;
    Frac(__int128 n, __int128 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = detail::gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    friend Frac operator+(Frac a, const Frac& b) {
        a += b;
        return a;
    }

    Frac& operator+=(const Frac& o) {
        __int128 g = detail::gcd128(den, o.den);
        __int128 od_g = o.den / g;
        __int128 a, b, n, d;
        if (__builtin_mul_overflow(num, od_g, &a) ||
            __builtin_mul_overflow(o.num, den / g, &b) ||
            __builtin_add_overflow(a, b, &n) ||
            __builtin_mul_overflow(den, od_g, &d))
            throw FracOverflow{};
        num = n;
        den = d;
        normalize();
        return *this;
    }

    bool operator<(const Frac& o) const {
        __int128 a, b;
        if (__builtin_mul_overflow(num, o.den, &a) ||
            __builtin_mul_overflow(o.num, den, &b))
            throw FracOverflow{};
        return a < b;
    }
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    bool operator>=(const Frac& o) const { return !(*this < o); }
    bool operator<=(const Frac& o) const { return *this < o || *this == o; }
    bool operator>(const Frac& o) const { return o < *this; }

    Rational to_rational() const {
        // cpp_int has no __int128 constructor; split into 64-bit halves.
        auto cvt = [](__int128 v) {
            bool neg = v < 0;
            unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
            BigInt r = (std::uint64_t)(u >> 64);
            r <<= 64;
            r += (std::uint64_t)u;
            return neg ? BigInt(-r) : r;
        };
        return Rational(cvt(num), cvt(den));
    }
};

}  // namespace tcg

#endif
