#include "dslice/matrix.hpp"

#include <sstream>
#include <utility>

#include "dslice/errors.hpp"

namespace dslice {

Integer determinant(const IntMatrix& m) {
    require(m.rows() == m.cols(), ErrorCode::InvalidInput, "determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n)
                return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

RatMatrix inverse(const RatMatrix& m) {
    int n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a(p, k) == 0) ++p;
        require(p < n, ErrorCode::InvalidInput, "matrix is singular");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Rational piv = a(k, k);
        for (int j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rational f = a(i, k);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

namespace {

struct SnfState {
    IntMatrix d, l, linv, r;
    Integer mod = 0;  // when nonzero, d and linv are kept reduced and l, r are not tracked

    void reduce(Integer& x) const {
        x %= mod;
        if (2 * x > mod) x -= mod;
        else if (2 * x < -mod) x += mod;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
        for (int c = 0; c < l.cols(); ++c) std::swap(l(i, c), l(j, c));
        for (int c = 0; c < linv.rows(); ++c) std::swap(linv(c, i), linv(c, j));
    }
    void swap_cols(int i, int j) {
        for (int c = 0; c < d.rows(); ++c) std::swap(d(c, i), d(c, j));
        for (int c = 0; c < r.rows(); ++c) std::swap(r(c, i), r(c, j));
    }
    // row_i += f * row_j
    void add_row(int i, int j, const Integer& f) {
        if (f == 0) return;
        for (int c = 0; c < d.cols(); ++c) d(i, c) += f * d(j, c);
        for (int c = 0; c < linv.rows(); ++c) linv(c, j) -= f * linv(c, i);
        if (mod != 0) {
            for (int c = 0; c < d.cols(); ++c) reduce(d(i, c));
            for (int c = 0; c < linv.rows(); ++c) reduce(linv(c, j));
            return;
        }
        for (int c = 0; c < l.cols(); ++c) l(i, c) += f * l(j, c);
    }
    // col_i += f * col_j
    void add_col(int i, int j, const Integer& f) {
        if (f == 0) return;
        for (int c = 0; c < d.rows(); ++c) d(c, i) += f * d(c, j);
        if (mod != 0) {
            for (int c = 0; c < d.rows(); ++c) reduce(d(c, i));
            return;
        }
        for (int c = 0; c < r.rows(); ++c) r(c, i) += f * r(c, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
        for (int c = 0; c < l.cols(); ++c) l(i, c) = -l(i, c);
        for (int c = 0; c < linv.rows(); ++c) linv(c, i) = -linv(c, i);
    }
};

void run_snf(SnfState& s) {
    int m = s.d.rows(), n = s.d.cols();
    int t = 0;
    while (t < m && t < n) {
        // Pick the smallest nonzero entry in the remaining block as pivot.
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (s.d(i, j) != 0 && (pi < 0 || abs_int(s.d(i, j)) < abs_int(s.d(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0)
            break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (s.d(i, t) == 0) continue;
                Integer q = s.d(i, t) / s.d(t, t);
                s.add_row(i, t, -q);
                if (s.d(i, t) != 0) {
                    s.swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (s.d(t, j) == 0) continue;
                Integer q = s.d(t, j) / s.d(t, t);
                s.add_col(j, t, -q);
                if (s.d(t, j) != 0) {
                    s.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Enforce divisibility of the remaining block by the pivot.
            for (int i = t + 1; i < m && clean; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (s.d(i, j) % s.d(t, t) != 0) {
                        s.add_row(t, i, 1);
                        clean = false;
                        break;
                    }
        }
        if (s.d(t, t) < 0)
            s.negate_row(t);
        ++t;
    }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    int m = a.rows(), n = a.cols();
    SnfState s{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
    run_snf(s);
    SmithForm out{s.d, s.l, s.linv, s.r, {}};
    for (int i = 0; i < std::min(m, n); ++i) out.diagonal.push_back(s.d(i, i));
    return out;
}

ModularSmithForm smith_normal_form_modular(const IntMatrix& a) {
    require(a.rows() == a.cols(), ErrorCode::InvalidInput, "presentation matrix must be square");
    int n = a.rows();
    Integer det = abs_int(determinant(a));
    require(det != 0, ErrorCode::InvalidInput, "presentation has a free summand (zero invariant factor)");
    ModularSmithForm out;
    out.linv = IntMatrix::identity(n);
    if (det == 1) {
        out.diagonal.assign(n, Integer(1));
        return out;
    }
    // Columns of det * I lie in the column lattice, so entries may be reduced mod det.
    SnfState s{a, IntMatrix(), IntMatrix::identity(n), IntMatrix(), det};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.reduce(s.d(i, j));
    run_snf(s);
    Integer product = 1;
    for (int i = 0; i < n; ++i) {
        Integer e = s.d(i, i) == 0 ? det : gcd_int(abs_int(s.d(i, i)), det);
        out.diagonal.push_back(e);
        product *= e;
    }
    require(product == det, ErrorCode::Internal, "modular Smith form lost the group order");
    for (int i = 0; i + 1 < n; ++i)
        require(out.diagonal[i + 1] % out.diagonal[i] == 0, ErrorCode::Internal, "modular Smith form is not a divisor chain");
    out.linv = s.linv;
    return out;
}

IntMatrix hermite_column_basis(const IntMatrix& a) {
    int k = a.rows();
    std::vector<std::vector<Integer>> cols;
    for (int j = 0; j < a.cols(); ++j) {
        std::vector<Integer> v(k);
        bool nz = false;
        for (int i = 0; i < k; ++i) {
            v[i] = a(i, j);
            nz = nz || v[i] != 0;
        }
        if (nz) cols.push_back(std::move(v));
    }
    IntMatrix h(k, k);
    for (int i = k - 1; i >= 0; --i) {
        // Euclid on row i across the working columns.
        for (;;) {
            int best = -1, nonzero = 0;
            for (int j = 0; j < static_cast<int>(cols.size()); ++j)
                if (cols[j][i] != 0) {
                    ++nonzero;
                    if (best < 0 || abs_int(cols[j][i]) < abs_int(cols[best][i])) best = j;
                }
            require(best >= 0, ErrorCode::InvalidInput, "lattice is not of full rank");
            if (nonzero == 1) {
                std::vector<Integer> piv = cols[best];
                cols.erase(cols.begin() + best);
                if (piv[i] < 0)
                    for (auto& x : piv) x = -x;
                for (int r = 0; r < k; ++r) h(r, i) = piv[r];
                break;
            }
            for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
                if (j == best || cols[j][i] == 0) continue;
                Integer q = cols[j][i] / cols[best][i];
                for (int r = 0; r <= i; ++r) cols[j][r] -= q * cols[best][r];
            }
        }
        // drop columns that became zero
        std::vector<std::vector<Integer>> kept;
        for (auto& v : cols) {
            bool nz = false;
            for (int r = 0; r < i; ++r) nz = nz || v[r] != 0;
            if (nz) kept.push_back(std::move(v));
        }
        cols = std::move(kept);
    }
    for (int j = 1; j < k; ++j)
        for (int i = j - 1; i >= 0; --i) {
            Integer q = h(i, j) / h(i, i);
            if (h(i, j) - q * h(i, i) < 0) q -= 1;
            if (q == 0) continue;
            for (int r = 0; r <= i; ++r) h(r, j) -= q * h(r, i);
        }
    return h;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace dslice
