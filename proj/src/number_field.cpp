#include "dslice/number_field.hpp"

#include "dslice/errors.hpp"

namespace dslice {

NumberField NumberField::for_angle(const ExactAngle& a) {
    NumberField k;
    k.angle_ = a;
    auto q = rational_cos(a);
    if (q && (*q == 1 || *q == -1)) {
        k.f_ = QPoly(std::vector<Rational>{-*q, Rational(1)});
    } else if (q) {
        k.f_ = QPoly(std::vector<Rational>{Rational(1), Rational(-2) * *q, Rational(1)});
    } else if (auto t = std::get_if<RationalTurn>(&a)) {
        k.f_ = to_q(cyclotomic(static_cast<int>(t->p)));
    } else {
        // omega satisfies m (x - 1)^6 + x^3 = 0
        const Integer& m = std::get<CosCbrt>(a).m;
        ZPoly xm1(std::vector<Integer>{-1, 1});
        ZPoly p = xm1 * xm1 * xm1;
        p = m * (p * p) + ZPoly::monomial(Integer(1), 3);
        k.f_ = monic(to_q(p));
    }
    QPoly x = QPoly::monomial(Rational(1), 1);
    if (k.f_.degree() == 1) {
        k.xinv_ = k.reduce(x);  // omega = +-1 is its own inverse
    } else {
        auto eg = ext_gcd(k.reduce(x), k.f_);
        k.xinv_ = k.reduce(eg.s);
    }
    if (q) {
        // Re(omega^k) = T_k(q)
        Rational t0 = 1, t1 = *q;
        for (int i = 0; i < std::max(1, k.degree()); ++i) {
            k.exact_re_.push_back(t0);
            Rational t2 = 2 * *q * t1 - t0;
            t0 = t1;
            t1 = t2;
        }
    }
    return k;
}

NumberField::Elem NumberField::inv(const Elem& a) const {
    require(!a.is_zero(), ErrorCode::Internal, "inverse of zero in number field");
    auto eg = ext_gcd(a, f_);
    require(eg.g.degree() == 0, ErrorCode::Internal, "non-invertible element: modulus is reducible");
    return reduce(eg.s);
}

NumberField::Elem NumberField::conj(const Elem& a) const {
    Elem acc;
    for (std::size_t i = a.c.size(); i-- > 0;) acc = reduce(acc * xinv_ + from(a.c[i]));
    return acc;
}

NumberField::Elem NumberField::eval(const ZPoly& p) const {
    Elem x = omega();
    Elem acc;
    for (std::size_t i = p.c.size(); i-- > 0;) acc = reduce(acc * x + from(Rational(p.c[i])));
    return acc;
}

const std::vector<Interval>& NumberField::real_parts(mpfr_prec_t prec) const {
    auto it = re_cache_.find(prec);
    if (it != re_cache_.end()) return it->second;
    std::vector<Interval> re;
    int n = std::max(1, degree());
    if (auto t = std::get_if<RationalTurn>(&angle_)) {
        for (int i = 0; i < n; ++i) re.push_back(Interval::cos_turn(t->r * i, t->p, prec));
    } else {
        Interval c = cos_interval(angle_, prec);
        Interval t0(Rational(1), prec), t1 = c, two(Rational(2), prec);
        for (int i = 0; i < n; ++i) {
            re.push_back(t0);
            Interval t2 = two * c * t1 - t0;
            t0 = t1;
            t1 = t2;
        }
    }
    return re_cache_.emplace(prec, std::move(re)).first->second;
}

int NumberField::real_sign(const Elem& a) const {
    if (a.is_zero()) return 0;
    if (!exact_re_.empty()) {
        Rational s = 0;
        for (std::size_t i = 0; i < a.c.size(); ++i) s += a.c[i] * exact_re_[i];
        require(s != 0, ErrorCode::Internal, "nonzero real element evaluated to zero");
        return sign_of(s);
    }
    mpfr_prec_t cap = precision_cap();
    for (mpfr_prec_t prec = kStartPrecision; prec <= cap; prec *= 2) {
        const auto& re = real_parts(prec);
        Interval s(prec);
        for (std::size_t i = 0; i < a.c.size(); ++i) s = s + Interval(a.c[i], prec) * re[i];
        if (int sg = s.certain_sign()) return sg;
    }
    fail(ErrorCode::PrecisionExhausted,
         "sign undecided at " + std::to_string(cap) + " bits (raise DSLICE_PRECISION_CAP)");
}

int hermitian_signature(const NumberField& k, std::vector<std::vector<NumberField::Elem>> m) {
    int n = static_cast<int>(m.size());
    int sig = 0;
    // active indices are [i, n)
    for (int i = 0; i < n; ++i) {
        int piv = -1;
        for (int j = i; j < n; ++j)
            if (!m[j][j].is_zero()) {
                piv = j;
                break;
            }
        if (piv < 0) {
            // all remaining diagonal entries vanish; create one from an off-diagonal entry
            int a = -1, b = -1;
            for (int r = i; r < n && a < 0; ++r)
                for (int c = r + 1; c < n; ++c)
                    if (!m[r][c].is_zero()) {
                        a = r;
                        b = c;
                        break;
                    }
            if (a < 0) {
                bool all_zero = true;
                for (int r = i; r < n; ++r) all_zero = all_zero && m[r][r].is_zero();
                require(all_zero, ErrorCode::Internal, "diagonalization bookkeeping failed");
                break;  // remaining block is zero: contributes nothing
            }
            // row_a += c row_b, col_a += conj(c) col_b for c in {1, omega}
            NumberField::Elem cands[2] = {k.from(1), k.omega()};
            bool done = false;
            for (const auto& c : cands) {
                NumberField::Elem cc = k.conj(c);
                NumberField::Elem d = k.mul(cc, m[a][b]) + k.mul(c, m[b][a]);
                if (d.is_zero()) continue;
                for (int col = i; col < n; ++col) m[a][col] = m[a][col] + k.mul(c, m[b][col]);
                for (int row = i; row < n; ++row) m[row][a] = m[row][a] + k.mul(cc, m[row][b]);
                done = true;
                break;
            }
            require(done, ErrorCode::Internal, "could not produce a nonzero pivot");
            piv = a;
        }
        if (piv != i) {
            std::swap(m[piv], m[i]);
            for (auto& row : m) std::swap(row[piv], row[i]);
        }
        const NumberField::Elem& d = m[i][i];
        sig += k.real_sign(d);
        NumberField::Elem dinv = k.inv(d);
        for (int r = i + 1; r < n; ++r) {
            if (m[r][i].is_zero()) continue;
            NumberField::Elem f = k.mul(m[r][i], dinv);
            NumberField::Elem fc = k.conj(f);
            for (int col = i; col < n; ++col) m[r][col] = m[r][col] - k.mul(f, m[i][col]);
            for (int row = i; row < n; ++row) m[row][r] = m[row][r] - k.mul(fc, m[row][i]);
        }
    }
    return sig;
}

}  // namespace dslice
