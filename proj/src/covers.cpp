#include "dslice/covers.hpp"

#include <deque>
#include <set>

#include "dslice/errors.hpp"

namespace dslice {

Integer FinAbGroup::order() const {
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
}

std::string FinAbGroup::str() const {
    if (invariant_factors.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) s += (i ? "+Z/" : "Z/") + invariant_factors[i].str();
    return s;
}

FinAbGroup cokernel(const IntMatrix& a) {
    ModularSmithForm snf = smith_normal_form_modular(a);
    FinAbGroup g;
    std::vector<int> cols;
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
        if (snf.diagonal[i] != 1) {
            g.invariant_factors.push_back(snf.diagonal[i]);
            cols.push_back(static_cast<int>(i));
        }
    }
    g.generators = IntMatrix(a.rows(), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int r = 0; r < a.rows(); ++r) g.generators(r, static_cast<int>(j)) = snf.linv(r, cols[j]);
    return g;
}

Integer cover_order_by_resultant(const SeifertMatrix& v, int n) {
    ZPoly delta = alexander_polynomial(v).to_poly();
    std::vector<Integer> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    Integer res = resultant(delta, ZPoly(std::move(c)));
    Integer d1 = abs_int(delta.eval(Integer(1)));
    return abs_int(res) / d1;
}

FinAbGroup branched_homology(const SeifertMatrix& v, int n) {
    require(n >= 2, ErrorCode::InvalidInput, "branched cover degree must be at least 2");
    int s = v.size();
    if (s == 0) return FinAbGroup{};
    const IntMatrix& m = v.matrix();
    IntMatrix mt = -m.transpose();
    IntMatrix big(s * n, s * n);
    for (int b = 0; b < n; ++b) {
        int nb = (b + 1) % n;
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                big(b * s + i, b * s + j) += m(i, j);
                big(b * s + i, nb * s + j) += mt(i, j);
            }
    }
    Integer expected = cover_order_by_resultant(v, n);
    FinAbGroup g;
    try {
        g = cokernel(big);
    } catch (const Error& e) {
        require(expected == 0, ErrorCode::Internal, "free summand in cover homology but nonzero resultant");
        fail(ErrorCode::InvalidInput, "H_1 of the " + std::to_string(n) +
                                          "-fold branched cover is infinite (Delta vanishes at an n-th root of unity)");
    }
    require(g.order() == expected, ErrorCode::Internal,
            "cover order " + g.order().str() + " disagrees with resultant " + expected.str());
    return g;
}

LinkedGroup linking_form_2fold(const SeifertMatrix& v) {
    LinkedGroup out;
    if (v.size() == 0) return out;
    IntMatrix a = v.matrix() + v.matrix().transpose();
    require(determinant(a) != 0, ErrorCode::InvalidInput, "V + V^T is singular");
    out.group = cokernel(a);
    RatMatrix ainv = inverse(to_rational(a));
    int k = out.group.rank(), n = a.rows();
    out.form.gram.assign(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rational s = 0;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    s += Rational(out.group.generators(r, i)) * ainv(r, c) * Rational(out.group.generators(c, j));
            out.form.gram[i][j] = frac_part(s);
        }
    return out;
}

Rational link(const LinkingForm& form, const std::vector<Integer>& x, const std::vector<Integer>& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (x[i] != 0 && y[j] != 0) s += Rational(x[i] * y[j]) * form.gram[i][j];
    return frac_part(s);
}

std::vector<std::vector<Integer>> Subgroup::generators() const {
    std::vector<std::vector<Integer>> out;
    for (int j = 0; j < lattice.cols(); ++j) {
        std::vector<Integer> v(lattice.rows());
        bool zero = true;
        for (int i = 0; i < lattice.rows(); ++i) {
            v[i] = lattice(i, j);
            if (i < static_cast<int>(moduli.size())) v[i] = mod_pos(v[i], moduli[i]);
            if (v[i] != 0) zero = false;
        }
        if (!zero) out.push_back(std::move(v));
    }
    return out;
}

namespace {

Subgroup closure(const FinAbGroup& g, const IntMatrix& base, const std::vector<Integer>* extra) {
    int k = g.rank();
    IntMatrix cols(k, base.cols() + (extra ? 1 : 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < base.cols(); ++j) cols(i, j) = base(i, j);
        if (extra) cols(i, base.cols()) = (*extra)[i];
    }
    Subgroup s;
    s.moduli = g.invariant_factors;
    s.lattice = hermite_column_basis(cols);
    Integer det = 1;
    for (int i = 0; i < k; ++i) det *= s.lattice(i, i);
    s.order = g.order() / det;
    return s;
}

bool isotropic(const LinkingForm& form, const Subgroup& s) {
    auto gens = s.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
            if (link(form, gens[i], gens[j]) != 0) return false;
    return true;
}

}  // namespace

MetabolizerResult metabolizer_split(const FinAbGroup& g, const LinkingForm& form, const MetabolizerOptions& opts) {
    MetabolizerResult out;
    Integer order = g.order();
    require(order <= opts.cap, ErrorCode::CapExceeded,
            "metabolizer search needs at least " + order.str() + " candidates (cap " + std::to_string(opts.cap) + ")");
    int k = g.rank();
    IntMatrix diag(k, k);
    for (int i = 0; i < k; ++i) diag(i, i) = g.invariant_factors[i];
    Subgroup trivial{IntMatrix::identity(k), 1, g.invariant_factors};
    if (k > 0) trivial = closure(g, diag, nullptr);

    std::vector<std::vector<Integer>> elements;
    {
        std::vector<Integer> x(k, 0);
        for (;;) {
            elements.push_back(x);
            int i = k - 1;
            while (i >= 0) {
                x[i] += 1;
                if (x[i] < g.invariant_factors[i]) break;
                x[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }

    std::set<Subgroup> seen{trivial};
    std::deque<Subgroup> queue{trivial};
    std::set<Subgroup> found;
    if (trivial.order * trivial.order == order) found.insert(trivial);
    while (!queue.empty()) {
        Subgroup s = queue.front();
        queue.pop_front();
        if (s.order * s.order >= order) continue;
        for (const auto& x : elements) {
            ++out.closures;
            require(out.closures <= opts.cap, ErrorCode::CapExceeded,
                    "metabolizer search exceeded " + std::to_string(opts.cap) + " closures");
            Subgroup t = closure(g, s.lattice, &x);
            if (t.order == s.order || t.order * t.order > order) continue;
            if (seen.count(t)) continue;
            seen.insert(t);
            if (!isotropic(form, t)) continue;
            queue.push_back(t);
            if (t.order * t.order == order) found.insert(t);
        }
    }
    out.metabolizers.assign(found.begin(), found.end());
    // post hoc re-verification
    for (const auto& h : out.metabolizers)
        require(h.order * h.order == order && isotropic(form, h), ErrorCode::Internal,
                "reported metabolizer fails re-verification");
    for (std::size_t i = 0; i < out.metabolizers.size() && !out.splitting; ++i)
        for (std::size_t j = i; j < out.metabolizers.size(); ++j) {
            const auto& a = out.metabolizers[i];
            const auto& b = out.metabolizers[j];
            if (a.order * b.order != order) continue;
            Subgroup sum = a;
            for (const auto& x : b.generators()) sum = closure(g, sum.lattice, &x);
            if (sum.order == order) {
                out.splitting = std::make_pair(a, b);
                break;
            }
        }
    return out;
}

bool gl_inequality(const GLInput& in) {
    require(in.d >= 0 && in.beta1_bar >= 0, ErrorCode::InvalidInput, "d and beta1_bar must be non-negative");
    return abs_int(in.sigma_value) + abs_int(in.d - 1 - in.beta1_bar) <= in.d;
}

}  // namespace dslice
