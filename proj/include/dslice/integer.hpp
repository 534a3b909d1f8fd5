#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace dslice {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }
inline Rational abs_rat(const Rational& a) { return a < 0 ? Rational(-a) : a; }

inline int sign_of(const Integer& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
inline int sign_of(const Rational& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

inline Integer gcd_int(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Floor of a rational, rounding toward negative infinity.
inline Integer floor_rat(const Rational& q) {
    Integer n = numer(q), d = denom(q);
    Integer f = n / d;
    if (n < 0 && f * d != n)
        f -= 1;
    return f;
}

/// Non-negative remainder of a modulo m (m > 0).
inline Integer mod_pos(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0)
        r += m;
    return r;
}

/// Fractional part in [0, 1).
inline Rational frac_part(const Rational& q) { return q - Rational(floor_rat(q)); }

inline bool fits_int64(const Integer& a) {
    static const Integer lo(std::numeric_limits<std::int64_t>::min());
    static const Integer hi(std::numeric_limits<std::int64_t>::max());
    return a >= lo && a <= hi;
}

inline std::int64_t to_int64(const Integer& a) { return a.convert_to<std::int64_t>(); }

inline std::string to_string(const Integer& a) { return a.str(); }

inline std::string to_string(const Rational& q) {
    if (denom(q) == 1)
        return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}

/// Parses "a" or "a/b".
Rational parse_rational(const std::string& text);

}  // namespace dslice
