#include "dslice/exact_angle.hpp"

#include "dslice/errors.hpp"

namespace dslice {

ExactAngle turn(const Integer& r, const Integer& p) {
    require(p >= 1, ErrorCode::InvalidInput, "turn denominator must be positive");
    Integer rr = mod_pos(r, p);
    Integer g = gcd_int(rr, p);
    if (g == 0) g = p;
    return RationalTurn{rr / g, p / g};
}

ExactAngle cos_angle(const Rational& q) {
    require(q >= -1 && q <= 1, ErrorCode::InvalidInput, "cosine value outside [-1, 1]: " + to_string(q));
    return CosRational{q};
}

std::optional<Integer> exact_cbrt(const Integer& m) {
    Integer lo = 0, hi = 1;
    while (hi * hi * hi < m) hi *= 2;
    while (lo < hi) {
        Integer mid = (lo + hi) / 2;
        if (mid * mid * mid < m) lo = mid + 1;
        else hi = mid;
    }
    if (lo * lo * lo == m) return lo;
    return std::nullopt;
}

ExactAngle theta_cos(const Integer& m) {
    require(m >= 1, ErrorCode::InvalidInput, "theta_m needs m >= 1");
    if (auto c = exact_cbrt(m)) return CosRational{Rational(1) - Rational(1, 2 * *c)};
    return CosCbrt{m};
}

bool is_cos_value(const ExactAngle& a) { return !std::holds_alternative<RationalTurn>(a); }

Rational folded_turn(const RationalTurn& t) {
    Integer r = t.r;
    if (2 * r > t.p) r = t.p - r;
    return Rational(r, t.p);
}

std::optional<Rational> rational_cos(const ExactAngle& a) {
    if (auto c = std::get_if<CosRational>(&a)) return c->q;
    if (auto t = std::get_if<RationalTurn>(&a)) {
        Rational f = folded_turn(*t);
        if (f == 0) return Rational(1);
        if (f == Rational(1, 6)) return Rational(1, 2);
        if (f == Rational(1, 4)) return Rational(0);
        if (f == Rational(1, 3)) return Rational(-1, 2);
        if (f == Rational(1, 2)) return Rational(-1);
    }
    return std::nullopt;
}

Interval cos_interval(const ExactAngle& a, mpfr_prec_t prec) {
    if (auto q = rational_cos(a)) return Interval(*q, prec);
    if (auto t = std::get_if<RationalTurn>(&a)) return Interval::cos_turn(t->r, t->p, prec);
    const auto& c = std::get<CosCbrt>(a);
    Interval mu = Interval::cbrt(c.m, prec);
    Interval two_mu = Interval(Rational(2), prec) * mu;
    return Interval(Rational(1), prec) - two_mu.reciprocal();
}

namespace {

// cos(theta_m) > q exactly, for m not a cube.
bool cbrt_cos_greater(const Integer& m, const Rational& q) {
    if (q >= 1) return false;
    // 1 - 1/(2 mu) > q  <=>  mu > 1/(2(1-q))  <=>  m > 1/(8 (1-q)^3)
    Rational y = 1 - q;
    return Rational(m) * 8 * y * y * y > 1;
}

// cos(theta_a) > cos(theta_b) (i.e. theta_a < theta_b) decided exactly, if possible.
std::optional<bool> exact_cos_greater(const ExactAngle& a, const ExactAngle& b) {
    auto qa = rational_cos(a), qb = rational_cos(b);
    if (qa && qb) return *qa > *qb;
    auto ta = std::get_if<RationalTurn>(&a), tb = std::get_if<RationalTurn>(&b);
    if (ta && tb) return folded_turn(*ta) < folded_turn(*tb);
    auto ca = std::get_if<CosCbrt>(&a), cb = std::get_if<CosCbrt>(&b);
    if (ca && cb) return ca->m > cb->m;
    if (ca && qb) return cbrt_cos_greater(ca->m, *qb);
    if (qa && cb) return !cbrt_cos_greater(cb->m, *qa);  // never equal: cbrt cosine is irrational
    return std::nullopt;
}

}  // namespace

bool angle_less(const ExactAngle& a, const ExactAngle& b) {
    if (auto r = exact_cos_greater(a, b)) return *r;
    mpfr_prec_t cap = precision_cap();
    for (mpfr_prec_t prec = kStartPrecision; prec <= cap; prec *= 2) {
        Interval ca = cos_interval(a, prec), cb = cos_interval(b, prec);
        int s = (ca - cb).certain_sign();
        if (s != 0) return s > 0;
    }
    fail(ErrorCode::Undecidable,
         "cannot order angles " + to_string(a) + " and " + to_string(b) + " within " +
             std::to_string(cap) + " bits");
}

bool angle_equal(const ExactAngle& a, const ExactAngle& b) { return !angle_less(a, b) && !angle_less(b, a); }

std::string to_string(const ExactAngle& a) {
    if (auto t = std::get_if<RationalTurn>(&a)) return "turn(" + t->r.str() + "/" + t->p.str() + ")";
    if (auto c = std::get_if<CosRational>(&a)) return "cos=" + to_string(c->q);
    return "theta_" + std::get<CosCbrt>(a).m.str();
}

}  // namespace dslice
