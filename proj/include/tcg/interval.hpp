#ifndef TCG_INTERVAL_HPP
#define TCG_INTERVAL_HPP

#include <cmath>

#include "tcg/rational.hpp"

namespace tcg {

// Directed-rounding interval used only to evaluate the transcendental bound
// formulas (ln, ln ln, 2^x). Every libm result is widened by several ulps in
// both directions, which over-covers glibc's <= 1 ulp error, so a verdict
// taken against .lo / .hi is rigorous. Exact game arithmetic never touches
// this type.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static Interval from_rational(const Rational& q);
    static Interval point(double v) { return widen({v, v}); }
    static Interval widen(Interval x, int ulps = 8);

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;

    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }

    // Verdicts: true only when the relation certainly holds.
    bool certainly_less(const Rational& q) const;
    bool certainly_greater(const Rational& q) const;
    bool certainly_below(const Interval& o) const { return hi < o.lo; }
};

Interval interval_ln(const Interval& x);     // requires x.lo > 0
Interval interval_sqrt(const Interval& x);   // requires x.lo >= 0
Interval interval_exp2(const Interval& x);   // 2^x
Interval interval_log2(const Interval& x);   // requires x.lo > 0

// Rational comparison helpers against interval endpoints.
bool rational_below(const Rational& q, const Interval& x);   // q < x.lo
bool rational_above(const Rational& q, const Interval& x);   // q > x.hi

}  // namespace tcg

#endif
