#include "dslice/knot_core.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dslice/errors.hpp"
#include "dslice/number_field.hpp"

namespace dslice {

void validate_seifert(const IntMatrix& v) {
    require(v.rows() == v.cols(), ErrorCode::InvalidInput, "Seifert matrix must be square");
    require(v.rows() % 2 == 0, ErrorCode::InvalidInput, "Seifert matrix must have even dimension");
    Integer d = determinant(v - v.transpose());
    require(d == 1 || d == -1, ErrorCode::InvalidInput,
            "det(V - V^T) = " + d.str() + ", expected +-1");
}

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) { validate_seifert(v_); }

namespace {

// det(V - t V^T) as a polynomial, by exact interpolation at t = 0..2g.
ZPoly seifert_determinant(const IntMatrix& v) {
    int n = v.rows();
    if (n == 0) return ZPoly::constant(1);
    IntMatrix vt = v.transpose();
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= n; ++t) {
        xs.emplace_back(t);
        ys.emplace_back(determinant(v - Integer(t) * vt));
    }
    // Newton divided differences
    std::vector<Rational> coef = ys;
    for (int j = 1; j <= n; ++j)
        for (int i = n; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    QPoly p = QPoly::constant(coef[n]);
    for (int i = n - 1; i >= 0; --i)
        p = p * QPoly(std::vector<Rational>{-xs[i], Rational(1)}) + QPoly::constant(coef[i]);
    std::vector<Integer> out;
    for (const auto& c : p.c) {
        require(denom(c) == 1, ErrorCode::Internal, "non-integral Alexander coefficient");
        out.push_back(numer(c));
    }
    return ZPoly(std::move(out));
}

// D(x) with t^{-h} Delta(t) = D((t + 1/t)/2), h = deg/2.
QPoly cosine_polynomial(const ZPoly& delta) {
    int d = delta.degree();
    require(d % 2 == 0 && (delta.reciprocal() == delta || delta.reciprocal() == -delta),
            ErrorCode::Internal, "Alexander polynomial is not symmetric");
    int h = d / 2;
    QPoly out = QPoly::constant(Rational(delta.coeff(h)));
    QPoly t0 = QPoly::constant(Rational(1)), t1 = QPoly::monomial(Rational(1), 1);
    QPoly two_x = QPoly::monomial(Rational(2), 1);
    for (int j = 1; j <= h; ++j) {
        out = out + Rational(2 * delta.coeff(h + j)) * t1;
        QPoly t2 = two_x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return out;
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
    std::vector<QPoly> s{p, p.derivative()};
    while (!s.back().is_zero()) {
        QPoly r = divmod(s[s.size() - 2], s.back()).second;
        if (r.is_zero()) break;
        s.push_back(-r);
    }
    return s;
}

int sign_changes(const std::vector<QPoly>& s, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& p : s) {
        int sg = sign_of(p.eval(x));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

// Distinct real roots in (a, b] of a square-free polynomial.
int roots_in(const std::vector<QPoly>& s, const Rational& a, const Rational& b) {
    return sign_changes(s, a) - sign_changes(s, b);
}

QPoly squarefree_part(const QPoly& p) {
    return divmod(p, gcd(p, p.derivative())).first;
}

}  // namespace

LaurentPoly alexander_polynomial(const SeifertMatrix& v) {
    LaurentPoly d = LaurentPoly::from_poly(seifert_determinant(v.matrix())).normalized();
    Integer at1 = d.eval(1);
    require(at1 == 1 || at1 == -1, ErrorCode::Internal, "Delta(1) != +-1");
    return d;
}

bool is_jump_point(const SeifertMatrix& v, const ExactAngle& w) {
    if (v.size() == 0) return false;
    ZPoly delta = alexander_polynomial(v).to_poly();
    NumberField k = NumberField::for_angle(w);
    return k.eval(delta).is_zero();
}

int signature_at(const SeifertMatrix& v, const ExactAngle& w) {
    if (v.size() == 0) return 0;
    NumberField k = NumberField::for_angle(w);
    ZPoly delta = alexander_polynomial(v).to_poly();
    if (k.eval(delta).is_zero())
        fail(ErrorCode::JumpPoint, "Delta vanishes at " + to_string(w) + "; the signature jumps there");
    if (auto q = rational_cos(w); q && *q == 1) return 0;
    const IntMatrix& m = v.matrix();
    int n = m.rows();
    using E = NumberField::Elem;
    E om = k.omega(), one = k.from(1);
    E a = one - om, b = one - k.conj(om);
    std::vector<std::vector<E>> h(n, std::vector<E>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[i][j] = k.reduce(Rational(m(i, j)) * a + Rational(m(j, i)) * b);
    return hermitian_signature(k, std::move(h));
}

OneSidedSignature signature_limits(const SeifertMatrix& v, const ExactAngle& w) {
    if (v.size() == 0) return {0, 0};
    QPoly d = squarefree_part(cosine_polynomial(alexander_polynomial(v).to_poly()));
    auto sturm = sturm_sequence(d);
    bool jump = is_jump_point(v, w);
    int want = jump ? 1 : 0;
    auto exact = rational_cos(w);
    Rational width(1, 64);
    mpfr_prec_t prec = 128;
    for (int iter = 0; iter < 400; ++iter, width /= 2) {
        if (iter % 32 == 31) prec *= 2;
        Interval x0 = cos_interval(w, prec);
        Rational lo = std::max(Rational(-1), x0.lower() - width);
        Rational hi = std::min(Rational(1), x0.upper() + width);
        if (d.eval(lo) == 0 || d.eval(hi) == 0) continue;
        int cnt = roots_in(sturm, lo, hi);
        if (exact && *exact == 1) cnt = roots_in(sturm, lo, Rational(1));
        if (cnt != want) continue;
        if (exact && *exact == 1) {
            int s = signature_at(v, cos_angle(lo));
            return {s, s};
        }
        if (exact && *exact == -1) {
            int s = signature_at(v, cos_angle(hi));
            return {s, s};
        }
        return {signature_at(v, cos_angle(hi)), signature_at(v, cos_angle(lo))};
    }
    fail(ErrorCode::PrecisionExhausted, "could not isolate the roots of Delta near " + to_string(w));
}

std::optional<StepSignature> catalog_step_signature(const SeifertMatrix& v) {
    StepSignature out;
    if (v.size() == 0) return out;
    QPoly d = squarefree_part(cosine_polynomial(alexander_polynomial(v).to_poly()));
    auto sturm = sturm_sequence(d);
    int total = roots_in(sturm, Rational(-1), Rational(1)) - (d.eval(Rational(1)) == 0 ? 1 : 0);
    std::vector<Rational> roots;
    for (const auto& [f, e] : factor(to_z_primitive(d)).factors) {
        if (f.degree() != 1) continue;
        Rational r(-f.c[0], f.c[1]);
        if (r > -1 && r < 1) roots.push_back(r);
    }
    if (static_cast<int>(roots.size()) != total) return std::nullopt;
    std::sort(roots.begin(), roots.end(), std::greater<>());
    std::vector<Rational> probes;
    Rational prev = 1;
    for (const auto& r : roots) {
        probes.push_back((prev + r) / 2);
        prev = r;
    }
    probes.push_back((prev - 1) / 2);
    int last = signature_at(v, cos_angle(probes[0]));
    require(last == 0, ErrorCode::Internal, "signature does not vanish near theta = 0");
    for (std::size_t i = 0; i < roots.size(); ++i) {
        int s = signature_at(v, cos_angle(probes[i + 1]));
        if (s != last) out.jumps.push_back({cos_angle(roots[i]), s - last});
        last = s;
    }
    return out;
}

int arf(const SeifertMatrix& v) {
    Integer d = abs_int(alexander_polynomial(v).eval(-1));
    Integer r = d % 8;
    return (r == 1 || r == 7) ? 0 : 1;
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    return SeifertMatrix(block_diagonal(a.matrix(), b.matrix()));
}

SeifertMatrix mirror(const SeifertMatrix& v) { return SeifertMatrix(-v.matrix().transpose()); }

SeifertMatrix reverse_orientation(const SeifertMatrix& v) { return SeifertMatrix(v.matrix().transpose()); }

std::optional<std::vector<int>> hyperbolic_shape(const IntMatrix& v) {
    int n = v.rows();
    int g = n / 2;
    if (n == 0) return std::vector<int>{};
    std::vector<int> sel(n, 0);
    std::fill(sel.begin(), sel.begin() + g, 1);
    // iterate subsets of size g in lexicographic order of index sets
    std::vector<int> idx(g);
    for (int i = 0; i < g; ++i) idx[i] = i;
    for (;;) {
        std::vector<bool> in(n, false);
        for (int i : idx) in[i] = true;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (in[i] == in[j] && v(i, j) != 0) ok = false;
        if (ok) return idx;
        int pos = g - 1;
        while (pos >= 0 && idx[pos] == n - g + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < g; ++i) idx[i] = idx[i - 1] + 1;
    }
    return std::nullopt;
}

namespace {

IntMatrix permutation_for(const std::vector<int>& sel, int n) {
    std::vector<bool> in(n, false);
    for (int i : sel) in[i] = true;
    std::vector<int> order(sel);
    for (int i = 0; i < n; ++i)
        if (!in[i]) order.push_back(i);
    IntMatrix p(n, n);
    for (int j = 0; j < n; ++j) p(order[j], j) = 1;
    return p;
}

HyperbolicityVerdict factorization_test(const SeifertMatrix& v) {
    HyperbolicityVerdict out;
    ZPoly delta = alexander_polynomial(v).to_poly();
    Factorization fac = factor(delta);
    std::map<ZPoly, int> mult;
    for (const auto& [f, e] : fac.factors) mult[f] += e;
    ZPoly f = ZPoly::constant(1);
    for (const auto& [q, e] : mult) {
        ZPoly qs = primitive_part(q.reciprocal());
        if (qs == q) {
            if (e % 2 != 0) {
                out.kind = HyperbolicityVerdict::Kind::FailsNecessary;
                out.reason = "symmetric irreducible factor " + to_string(q) + " has odd multiplicity " +
                             std::to_string(e) + "; Delta is not f(t) f(1/t) up to units";
                return out;
            }
            for (int i = 0; i < e / 2; ++i) f = f * q;
        } else {
            auto it = mult.find(qs);
            int es = it == mult.end() ? 0 : it->second;
            if (es != e) {
                out.kind = HyperbolicityVerdict::Kind::FailsNecessary;
                out.reason = "factor " + to_string(q) + " is not matched by its reciprocal";
                return out;
            }
            if (q < qs)
                for (int i = 0; i < e; ++i) f = f * q;
        }
    }
    ZPoly check = f * f.reciprocal();
    require(primitive_part(check) == primitive_part(delta), ErrorCode::Internal,
            "f f* reconstruction does not reproduce Delta");
    out.kind = HyperbolicityVerdict::Kind::Unknown;
    out.factor = f;
    out.reason = "Delta = f(t) f*(t) with f = " + to_string(f);
    return out;
}

}  // namespace

Integer hyperbolic_search_size(const SeifertMatrix& v, const SearchOptions& opts) {
    int n = v.size();
    Integer gens = 2 * n * (n - 1);
    Integer total = 0, term = 1;
    for (int l = 0; l <= opts.word_length; ++l) {
        total += term;
        term *= gens;
    }
    return total;
}

HyperbolicityVerdict hyperbolicity_check(const SeifertMatrix& v, HyperbolicityMode mode,
                                         const SearchOptions& opts) {
    int n = v.size();
    if (mode == HyperbolicityMode::Shape) {
        HyperbolicityVerdict out;
        if (auto sel = hyperbolic_shape(v.matrix())) {
            out.kind = HyperbolicityVerdict::Kind::Hyperbolic;
            out.witness = permutation_for(*sel, n);
            out.reason = "block off-diagonal with equal zero blocks";
        } else {
            out.kind = HyperbolicityVerdict::Kind::Unknown;
            out.reason = "not of block off-diagonal shape";
        }
        return out;
    }
    HyperbolicityVerdict fac = factorization_test(v);
    if (mode == HyperbolicityMode::Factorization || fac.kind == HyperbolicityVerdict::Kind::FailsNecessary)
        return fac;

    Integer size = hyperbolic_search_size(v, opts);
    require(size <= opts.cap, ErrorCode::CapExceeded,
            "search would examine " + size.str() + " words (cap " + std::to_string(opts.cap) + ")");
    struct Node {
        IntMatrix w, p;
        int depth;
    };
    std::deque<Node> queue{{v.matrix(), IntMatrix::identity(n), 0}};
    std::set<IntMatrix> seen{v.matrix()};
    while (!queue.empty()) {
        Node cur = std::move(queue.front());
        queue.pop_front();
        if (auto sel = hyperbolic_shape(cur.w)) {
            HyperbolicityVerdict out;
            out.kind = HyperbolicityVerdict::Kind::Hyperbolic;
            out.witness = cur.p * permutation_for(*sel, n);
            out.factor = fac.factor;
            out.reason = "congruent to a hyperbolic matrix at word length " + std::to_string(cur.depth);
            return out;
        }
        if (cur.depth == opts.word_length) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                for (int s : {1, -1}) {
                    // column j += s * column i
                    IntMatrix e = IntMatrix::identity(n);
                    e(i, j) = s;
                    IntMatrix w = e.transpose() * cur.w * e;
                    if (!seen.insert(w).second) continue;
                    queue.push_back({w, cur.p * e, cur.depth + 1});
                }
            }
    }
    fac.reason += "; no hyperbolic congruent form within word length " + std::to_string(opts.word_length);
    return fac;
}

std::string kind_name(HyperbolicityVerdict::Kind k) {
    switch (k) {
        case HyperbolicityVerdict::Kind::Hyperbolic: return "hyperbolic";
        case HyperbolicityVerdict::Kind::FailsNecessary: return "fails_necessary";
        case HyperbolicityVerdict::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace dslice
