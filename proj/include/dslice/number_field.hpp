#pragma once

#include <map>
#include <vector>

#include "dslice/exact_angle.hpp"
#include "dslice/poly.hpp"

namespace dslice {

/// Q(omega) for omega = e^{i theta}, presented as Q[x]/(f) with x -> omega.
/// Complex conjugation is the automorphism x -> x^{-1}.
class NumberField {
public:
    using Elem = QPoly;

    static NumberField for_angle(const ExactAngle& a);

    const QPoly& modulus() const { return f_; }
    int degree() const { return f_.degree(); }
    /// True when omega is real (omega = 1 or omega = -1).
    bool omega_real() const { return f_.degree() == 1; }

    Elem reduce(const QPoly& p) const { return divmod(p, f_).second; }
    Elem from(const Rational& q) const { return QPoly::constant(q); }
    Elem omega() const { return reduce(QPoly::monomial(Rational(1), 1)); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem inv(const Elem& a) const;
    Elem conj(const Elem& a) const;
    Elem eval(const ZPoly& p) const;

    /// Sign of a real element (conj(a) == a), certified by exact arithmetic or
    /// interval refinement; PrecisionExhausted at the cap.
    int real_sign(const Elem& a) const;

private:
    QPoly f_;
    QPoly xinv_;
    ExactAngle angle_;
    std::vector<Rational> exact_re_;  // Re(omega^k) when cos(theta) is rational
    mutable std::map<mpfr_prec_t, std::vector<Interval>> re_cache_;

    const std::vector<Interval>& real_parts(mpfr_prec_t prec) const;
};

/// Number of positive minus negative eigenvalues of a Hermitian matrix over the
/// field, by congruence diagonalization with exact zero tests.
int hermitian_signature(const NumberField& k, std::vector<std::vector<NumberField::Elem>> m);

}  // namespace dslice
