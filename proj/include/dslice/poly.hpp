#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dslice/integer.hpp"

namespace dslice {

/// Dense univariate polynomial; c[k] is the coefficient of x^k. Always trimmed.
template <class T>
struct Poly {
    std::vector<T> c;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }
    static Poly monomial(const T& a, int k) {
        std::vector<T> v(k + 1);
        v[k] = a;
        return Poly(std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const T& lead() const { return c.back(); }
    T coeff(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : T(0); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c.size() != b.c.size())
            return a.c.size() < b.c.size();
        for (std::size_t i = a.c.size(); i-- > 0;)
            if (a.c[i] != b.c[i])
                return a.c[i] < b.c[i];
        return false;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> v(std::max(a.c.size(), b.c.size()));
        for (std::size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<T> v(a.c.size() + b.c.size() - 1);
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                v[i + j] += a.c[i] * b.c[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const T& s, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c) x *= s;
        r.trim();
        return r;
    }

    template <class U>
    U eval(const U& x) const {
        U acc(0);
        for (std::size_t i = c.size(); i-- > 0;)
            acc = acc * x + U(c[i]);
        return acc;
    }

    Poly derivative() const {
        if (c.size() <= 1)
            return Poly();
        std::vector<T> v(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * T(static_cast<long>(i));
        return Poly(std::move(v));
    }

    /// x^deg * p(1/x).
    Poly reciprocal() const {
        std::vector<T> v(c.rbegin(), c.rend());
        return Poly(std::move(v));
    }
};

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

Integer content(const ZPoly& p);
/// Primitive part with positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);
QPoly to_q(const ZPoly& p);
/// Clears denominators and returns the primitive integer polynomial.
ZPoly to_z_primitive(const QPoly& p);

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& p);
QPoly gcd(const QPoly& a, const QPoly& b);
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// Returns (g, s, t) with s a + t b = g monic.
struct ExtGcd { QPoly g, s, t; };
ExtGcd ext_gcd(const QPoly& a, const QPoly& b);

/// Exact division over Z; returns false when b does not divide a.
bool divides_exactly(const ZPoly& a, const ZPoly& b, ZPoly* quotient = nullptr);

Integer resultant(const ZPoly& a, const ZPoly& b);

/// Cyclotomic polynomial Phi_n.
ZPoly cyclotomic(int n);

/// Factorization over Z: sign * content * prod f_i^{e_i}; factors primitive with positive leading coefficient.
struct Factorization {
    Integer unit;
    std::vector<std::pair<ZPoly, int>> factors;
};
Factorization factor(const ZPoly& p);

/// Square-free decomposition of a primitive polynomial: pairs (s_i, i).
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p);

std::string to_string(const ZPoly& p, char var = 't');
std::string to_string(const QPoly& p, char var = 'x');

/// Laurent polynomial with integer coefficients: exponent -> nonzero coefficient.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<long, Integer> coeffs);
    static LaurentPoly from_poly(const ZPoly& p, long shift = 0);
    static LaurentPoly one() { return from_poly(ZPoly::constant(1)); }

    const std::map<long, Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Representative with lowest exponent 0 and positive leading coefficient.
    LaurentPoly normalized() const;
    ZPoly to_poly() const;  // of the normalized representative
    bool equal_up_to_units(const LaurentPoly& o) const;
    Integer eval(const Integer& t) const;  // t = +-1 only
    /// t^deg * p(1/t) up to units equals p.
    bool is_symmetric() const;
    std::string str() const;

private:
    std::map<long, Integer> coeffs_;
};

}  // namespace dslice
