#ifndef TCG_RATIONAL_HPP
#define TCG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "tcg/errors.hpp"

namespace tcg {

// All game arithmetic is exact. Stability hinges on razor-thin comparisons
// (109/42 vs 13/5), so no floating point appears in any decision procedure.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// "p/q" serialization used in all JSON/CSV reports.
std::string to_fraction_string(const Rational& q);
Rational parse_fraction(const std::string& text);

// n-th harmonic number 1 + 1/2 + ... + 1/n.
Rational harmonic(int n);

// Reporting-only conversion; never used in comparisons or verdicts.
double approx(const Rational& q);

// Cost of one agent: a finite exact rational, or infinite when the agent's
// node has no path to the root.
struct CostValue {
    bool finite = true;
    Rational value;  // meaningful only when finite

    static CostValue infinity() { return CostValue{false, Rational(0)}; }
    static CostValue of(Rational v) { return CostValue{true, std::move(v)}; }

    bool operator==(const CostValue& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
    bool operator<(const CostValue& o) const {
        if (!finite) return false;       // inf < x never
        if (!o.finite) return true;      // finite < inf
        return value < o.value;
    }
    bool operator<=(const CostValue& o) const { return *this < o || *this == o; }
    bool operator>(const CostValue& o) const { return o < *this; }
    bool operator>=(const CostValue& o) const { return o <= *this; }
};

std::string to_string(const CostValue& c);

}  // namespace tcg

#endif
