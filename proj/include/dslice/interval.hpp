#pragma once

#include <mpfr.h>

#include "dslice/integer.hpp"

namespace dslice {

/// Closed real interval [lo, hi] with MPFR endpoints and outward rounding.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec);
    Interval(const Rational& q, mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval& operator=(const Interval& o);
    ~Interval();

    mpfr_prec_t precision() const { return prec_; }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator-() const;

    /// 1 if strictly positive, -1 if strictly negative, 0 when the interval contains 0.
    int certain_sign() const;
    bool overlaps(const Interval& o) const;
    double mid_double() const;
    Rational lower() const;
    Rational upper() const;

    /// cos(2 pi r / p), rigorously enclosed.
    static Interval cos_turn(const Integer& r, const Integer& p, mpfr_prec_t prec);
    /// Enclosure of the real cube root of m.
    static Interval cbrt(const Integer& m, mpfr_prec_t prec);
    /// 1 / x for an interval not containing 0.
    Interval reciprocal() const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

/// Maximum working precision in bits; defaults to 4096 and may be overridden by
/// the DSLICE_PRECISION_CAP environment variable.
mpfr_prec_t precision_cap();
void set_precision_cap(mpfr_prec_t bits);
constexpr mpfr_prec_t kStartPrecision = 64;

}  // namespace dslice
