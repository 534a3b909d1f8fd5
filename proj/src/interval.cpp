#include "dslice/interval.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include "dslice/errors.hpp"

namespace dslice {

namespace {

std::atomic<long> g_cap{0};

void set_q(mpfr_t x, const Rational& q, mpfr_rnd_t rnd) { mpfr_set_q(x, q.backend().data(), rnd); }

}  // namespace

mpfr_prec_t precision_cap() {
    long cap = g_cap.load();
    if (cap > 0) return cap;
    cap = 4096;
    if (const char* env = std::getenv("DSLICE_PRECISION_CAP")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= kStartPrecision) cap = v;
    }
    g_cap.store(cap);
    return cap;
}

void set_precision_cap(mpfr_prec_t bits) { g_cap.store(std::max<long>(bits, kStartPrecision)); }

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, mpfr_prec_t prec) : Interval(prec) {
    set_q(lo_, q, MPFR_RNDD);
    set_q(hi_, q, MPFR_RNDU);
}

Interval::Interval(const Interval& o) : Interval(o.prec_) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    mpfr_prec_t p = std::max(prec_, o.prec_);
    Interval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    const mpfr_srcptr a[2] = {lo_, hi_};
    const mpfr_srcptr b[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto x : a)
        for (auto y : b) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::reciprocal() const {
    require(certain_sign() != 0, ErrorCode::Internal, "reciprocal of an interval containing zero");
    Interval r(prec_);
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
}

int Interval::certain_sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool Interval::overlaps(const Interval& o) const {
    return !(mpfr_less_p(hi_, o.lo_) || mpfr_less_p(o.hi_, lo_));
}

double Interval::mid_double() const {
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

Rational Interval::lower() const {
    Rational q;
    mpfr_get_q(q.backend().data(), lo_);
    return q;
}

Rational Interval::upper() const {
    Rational q;
    mpfr_get_q(q.backend().data(), hi_);
    return q;
}

Interval Interval::cos_turn(const Integer& r, const Integer& p, mpfr_prec_t prec) {
    // x in [xlo, xhi] encloses 2 pi r / p; |cos x - cos xlo| <= xhi - xlo, and
    // mpfr_cos with round-to-nearest is within one ulp.
    Integer rr = mod_pos(r, p);
    mpfr_prec_t wp = prec + 32;
    mpfr_t pilo, pihi, xlo, xhi, c, err;
    mpfr_inits2(wp, pilo, pihi, xlo, xhi, c, err, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pilo, MPFR_RNDD);
    mpfr_const_pi(pihi, MPFR_RNDU);
    Rational f(2 * rr, p);
    mpfr_t q;
    mpfr_init2(q, wp);
    set_q(q, f, MPFR_RNDD);
    mpfr_mul(xlo, pilo, q, MPFR_RNDD);
    set_q(q, f, MPFR_RNDU);
    mpfr_mul(xhi, pihi, q, MPFR_RNDU);
    mpfr_cos(c, xlo, MPFR_RNDN);
    mpfr_sub(err, xhi, xlo, MPFR_RNDU);
    mpfr_t ulp;
    mpfr_init2(ulp, wp);
    mpfr_set_ui_2exp(ulp, 1, -(wp - 2), MPFR_RNDU);
    mpfr_add(err, err, ulp, MPFR_RNDU);
    Interval out(prec);
    mpfr_sub(out.lo_, c, err, MPFR_RNDD);
    mpfr_add(out.hi_, c, err, MPFR_RNDU);
    if (mpfr_cmp_si(out.lo_, -1) < 0) mpfr_set_si(out.lo_, -1, MPFR_RNDD);
    if (mpfr_cmp_si(out.hi_, 1) > 0) mpfr_set_si(out.hi_, 1, MPFR_RNDU);
    mpfr_clears(pilo, pihi, xlo, xhi, c, err, q, ulp, static_cast<mpfr_ptr>(nullptr));
    return out;
}

Interval Interval::cbrt(const Integer& m, mpfr_prec_t prec) {
    Interval out(prec);
    mpfr_t x;
    mpfr_init2(x, std::max<mpfr_prec_t>(prec, static_cast<mpfr_prec_t>(msb(abs_int(m)) + 2)));
    mpfr_set_z(x, m.backend().data(), MPFR_RNDN);
    mpfr_cbrt(out.lo_, x, MPFR_RNDD);
    mpfr_cbrt(out.hi_, x, MPFR_RNDU);
    mpfr_clear(x);
    return out;
}

}  // namespace dslice
