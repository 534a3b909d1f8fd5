#pragma once

// Generators and independent oracles shared by the unit tests and the acceptance binary.

#include <cmath>
#include <random>
#include <vector>

#include "dslice/gropes.hpp"
#include "dslice/knot_core.hpp"

namespace oracle {

using dslice::Integer;
using dslice::IntMatrix;
using dslice::Rational;
using dslice::ZPoly;

/// V = S + L with S symmetric and L the standard upper symplectic blocks, so V - V^T is unimodular.
inline IntMatrix random_seifert(std::mt19937_64& rng, int genus, int range) {
    int n = 2 * genus;
    IntMatrix v(n, n);
    std::uniform_int_distribution<int> d(-range, range);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int x = d(rng);
            v(i, j) += x;
            if (i != j) v(j, i) += x;
        }
    for (int k = 0; k < genus; ++k) v(2 * k, 2 * k + 1) += 1;
    return v;
}

/// Laplace expansion along the first row.
inline ZPoly det_laplace(const std::vector<std::vector<ZPoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) return ZPoly::constant(1);
    if (n == 1) return m[0][0];
    ZPoly acc;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<ZPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<ZPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        ZPoly term = m[0][c] * det_laplace(minor);
        acc = c % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

/// det(V - t V^T) by cofactor expansion, with leading zeros stripped and positive lead.
inline ZPoly alexander(const IntMatrix& v) {
    int n = v.rows();
    std::vector<std::vector<ZPoly>> m(n, std::vector<ZPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = ZPoly(std::vector<Integer>{v(i, j), -v(j, i)});
    ZPoly d = det_laplace(m);
    std::vector<Integer> c = d.c;
    while (!c.empty() && c.front() == 0) c.erase(c.begin());
    ZPoly out(c);
    if (!out.is_zero() && out.lead() < 0) out = -out;
    return out;
}

/// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier; c[k] is the coefficient of x^k.
inline std::vector<Rational> charpoly(const std::vector<std::vector<Rational>>& a) {
    std::size_t n = a.size();
    std::vector<Rational> coeff(n + 1);
    coeff[n] = 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                next[i][j] = s + (i == j ? coeff[n - k + 1] : Rational(0));
            }
        m = next;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
        coeff[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return coeff;
}

inline int sign_changes(const std::vector<Rational>& c) {
    int changes = 0, last = 0;
    for (const auto& x : c) {
        int s = x > 0 ? 1 : (x < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Signature of a real symmetric matrix: all roots of its characteristic
/// polynomial are real, so Descartes' rule counts them exactly.
inline int symmetric_signature(const std::vector<std::vector<Rational>>& a) {
    std::vector<Rational> c = charpoly(a);
    std::size_t z = 0;
    while (z < c.size() && c[z] == 0) ++z;
    std::vector<Rational> p(c.begin() + static_cast<long>(z), c.end());
    std::vector<Rational> q = p;
    for (std::size_t i = 1; i < q.size(); i += 2) q[i] = -q[i];
    return sign_changes(p) - sign_changes(q);
}

/// Levine-Tristram signature at omega = -1 (p = 2) or omega = i (p = 4) via the
/// realification [[A, -B], [B, A]] of H = A + iB, whose signature is twice that of H.
inline int lt_signature(const IntMatrix& v, int p) {
    int n = v.rows();
    std::vector<std::vector<Rational>> re(n, std::vector<Rational>(n)), im(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational a = Rational(v(i, j)), b = Rational(v(j, i));
            if (p == 2) {
                re[i][j] = 2 * a + 2 * b;
            } else {
                // (1 - i) a + (1 + i) b
                re[i][j] = a + b;
                im[i][j] = b - a;
            }
        }
    if (p == 2) return symmetric_signature(re);
    std::vector<std::vector<Rational>> big(2 * n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            big[i][j] = re[i][j];
            big[i][j + n] = -im[i][j];
            big[i + n][j] = im[i][j];
            big[i + n][j + n] = re[i][j];
        }
    return symmetric_signature(big) / 2;
}

/// |prod_{k=1}^{n-1} Delta(zeta^k)| in floating point, rounded.
inline long long cover_order_float(const ZPoly& delta, int n) {
    long double re = 1, im = 0;
    const long double pi = std::acos(-1.0L);
    for (int k = 1; k < n; ++k) {
        long double ar = 0, ai = 0;
        for (std::size_t e = 0; e < delta.c.size(); ++e) {
            long double c = delta.c[e].convert_to<long double>();
            ar += c * std::cos(2 * pi * k * e / n);
            ai += c * std::sin(2 * pi * k * e / n);
        }
        long double r2 = re * ar - im * ai;
        long double i2 = re * ai + im * ar;
        re = r2;
        im = i2;
    }
    return std::llround(std::hypot(re, im));
}

/// Random capped grope: body surfaces of genus 1..max_genus nested below
/// max_depth, caps meeting strands or body surfaces at random.
struct GropeGen {
    std::mt19937_64& rng;
    int max_depth = 3;
    int max_genus = 2;
    int max_hits = 2;
    double sub_prob = 0.6;

    dslice::Surface surface(int depth) {
        std::uniform_int_distribution<int> g(1, max_genus);
        std::bernoulli_distribution sub(sub_prob);
        dslice::Surface s;
        int genus = g(rng);
        for (int i = 0; i < genus; ++i) {
            dslice::Pair p;
            for (dslice::Side side : {dslice::Side::L, dslice::Side::R}) {
                if (depth + 1 < max_depth && sub(rng)) p.side(side).sub.push_back(surface(depth + 1));
            }
            s.pairs.push_back(std::move(p));
        }
        return s;
    }

    void collect(const dslice::Surface& s, dslice::Path& at, std::vector<dslice::Path>& out) {
        out.push_back(at);
        for (int i = 0; i < s.genus(); ++i)
            for (dslice::Side side : {dslice::Side::L, dslice::Side::R}) {
                const dslice::Branch& b = s.pairs[i].side(side);
                if (b.is_cap()) continue;
                at.push_back({i, side});
                collect(b.surface(), at, out);
                at.pop_back();
            }
    }

    void fill(dslice::Surface& s, const std::vector<dslice::Path>& sheets) {
        std::uniform_int_distribution<int> hits(0, max_hits);
        std::uniform_int_distribution<std::size_t> pick(0, sheets.size());
        for (auto& p : s.pairs)
            for (dslice::Side side : {dslice::Side::L, dslice::Side::R}) {
                dslice::Branch& b = p.side(side);
                if (!b.is_cap()) {
                    fill(b.surface(), sheets);
                    continue;
                }
                int k = hits(rng);
                for (int i = 0; i < k; ++i) {
                    std::size_t j = pick(rng);
                    if (j == sheets.size())
                        b.cap.intersections.push_back(dslice::SheetRef::strand("K"));
                    else
                        b.cap.intersections.push_back(dslice::SheetRef::sheet(sheets[j]));
                }
            }
    }

    dslice::GropeTree operator()(int boundary = 1) {
        dslice::GropeTree g;
        g.boundary_components = boundary;
        g.base = surface(0);
        std::vector<dslice::Path> sheets;
        dslice::Path at;
        collect(g.base, at, sheets);
        fill(g.base, sheets);
        return g;
    }
};

/// Height by the recursive definition, written independently of the library:
/// a cap is 0; a pair (x, y) of floored values gives 1 + min + (max > min ? 1/2 : 0);
/// a surface takes the minimum over its pairs. Returns twice the height, -1 for unbounded.
inline long long height_twice(const dslice::Surface& s);

inline long long branch_floor(const dslice::Branch& b) {
    if (b.is_cap()) return 0;
    return height_twice(b.surface()) / 2;
}

inline long long height_twice(const dslice::Surface& s) {
    if (s.pairs.empty()) return -1;
    long long best = -1;
    for (const auto& p : s.pairs) {
        long long x = branch_floor(p.left), y = branch_floor(p.right);
        long long lo = std::min(x, y), hi = std::max(x, y);
        long long v = 2 + 2 * lo + (hi > lo ? 1 : 0);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

}  // namespace oracle
