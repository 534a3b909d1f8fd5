#include "dslice/poly.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "dslice/errors.hpp"
#include "dslice/matrix.hpp"

namespace dslice {

Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer n(text.substr(0, slash)), d(text.substr(slash + 1));
        require(d != 0, ErrorCode::InvalidInput, "zero denominator in '" + text + "'");
        return Rational(n, d);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        fail(ErrorCode::InvalidInput, "not a rational number: '" + text + "'");
    }
}

Integer content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& x : p.c) g = gcd_int(g, x);
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.is_zero())
        return p;
    Integer g = content(p);
    if (p.lead() < 0) g = -g;
    std::vector<Integer> v;
    for (const auto& x : p.c) v.push_back(x / g);
    return ZPoly(std::move(v));
}

QPoly to_q(const ZPoly& p) {
    std::vector<Rational> v;
    for (const auto& x : p.c) v.emplace_back(x);
    return QPoly(std::move(v));
}

ZPoly to_z_primitive(const QPoly& p) {
    Integer l = 1;
    for (const auto& x : p.c) l = boost::multiprecision::lcm(l, denom(x));
    std::vector<Integer> v;
    for (const auto& x : p.c) v.push_back(numer(x) * (l / denom(x)));
    return primitive_part(ZPoly(std::move(v)));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    require(!b.is_zero(), ErrorCode::Internal, "polynomial division by zero");
    std::vector<Rational> r = a.c;
    int db = b.degree();
    std::vector<Rational> q(std::max(0, a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        Rational f = r[k] / b.lead();
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c[j];
    }
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly monic(const QPoly& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.lead();
    return inv * p;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero()) return ZPoly();
    return to_z_primitive(gcd(to_q(a), to_q(b)));
}

ExtGcd ext_gcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(1), s1, t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.lead();
    return {inv * r0, inv * s0, inv * t0};
}

bool divides_exactly(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        if (quotient) *quotient = ZPoly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<Integer> r = a.c;
    int db = b.degree();
    std::vector<Integer> q(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        if (r[k] % b.lead() != 0) return false;
        Integer f = r[k] / b.lead();
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c[j];
    }
    for (const auto& x : r)
        if (x != 0) return false;
    if (quotient) *quotient = ZPoly(std::move(q));
    return true;
}

Integer resultant(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    int m = a.degree(), n = b.degree();
    IntMatrix s(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s(i, i + j) = a.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s(n + i, i + j) = b.c[n - j];
    return determinant(s);
}

ZPoly cyclotomic(int n) {
    require(n >= 1, ErrorCode::InvalidInput, "cyclotomic index must be positive");
    std::vector<Integer> v(n + 1);
    v[0] = -1;
    v[n] = 1;
    ZPoly p(std::move(v));
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        ZPoly q;
        bool ok = divides_exactly(p, cyclotomic(d), &q);
        require(ok, ErrorCode::Internal, "cyclotomic division failed");
        p = q;
    }
    return p;
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p) {
    std::vector<std::pair<ZPoly, int>> out;
    if (p.degree() < 1) return out;
    QPoly f = monic(to_q(p));
    QPoly fd = f.derivative();
    QPoly a = gcd(f, fd);
    QPoly b = divmod(f, a).first;
    QPoly c = divmod(fd, a).first;
    QPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        QPoly g = gcd(b, d);
        if (g.degree() >= 1) out.emplace_back(to_z_primitive(g), i);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic over Z/p.

namespace {

using FpPoly = std::vector<long long>;

long long md(long long a, long long p) {
    a %= p;
    return a < 0 ? a + p : a;
}

long long pw(long long a, long long e, long long p) {
    long long r = 1;
    a = md(a, p);
    while (e) {
        if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * a % p);
        a = static_cast<long long>(static_cast<__int128>(a) * a % p);
        e >>= 1;
    }
    return r;
}

long long inv_mod(long long a, long long p) { return pw(a, p - 2, p); }

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_from(const ZPoly& z, long long p) {
    FpPoly a;
    for (const auto& x : z.c) a.push_back(md(static_cast<long long>(mod_pos(x, Integer(p))), p));
    fp_trim(a);
    return a;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, long long p) {
    FpPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] - b[i], p);
    fp_trim(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<long long>((r[i + j] + static_cast<__int128>(a[i]) * b[j]) % p);
    fp_trim(r);
    return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, long long p) {
    FpPoly r = a;
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {{}, r};
    FpPoly q(a.size() - db);
    long long li = inv_mod(b.back(), p);
    for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
        if (r[k] == 0) continue;
        long long f = static_cast<long long>(static_cast<__int128>(r[k]) * li % p);
        q[k - db] = f;
        for (int j = 0; j <= db; ++j)
            r[k - db + j] = md(r[k - db + j] - static_cast<long long>(static_cast<__int128>(f) * b[j] % p), p);
    }
    fp_trim(q);
    fp_trim(r);
    return {q, r};
}

FpPoly fp_monic(const FpPoly& a, long long p) {
    if (a.empty()) return a;
    long long li = inv_mod(a.back(), p);
    FpPoly r = a;
    for (auto& x : r) x = static_cast<long long>(static_cast<__int128>(x) * li % p);
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long long p) {
    while (!b.empty()) {
        FpPoly r = fp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

// (g, s, t) with s a + t b = g, g monic.
std::tuple<FpPoly, FpPoly, FpPoly> fp_ext_gcd(const FpPoly& a, const FpPoly& b, long long p) {
    FpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        auto [q, r] = fp_divmod(r0, r1, p);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p), t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    long long li = inv_mod(r0.back(), p);
    auto scale = [&](FpPoly v) {
        for (auto& x : v) x = static_cast<long long>(static_cast<__int128>(x) * li % p);
        return v;
    };
    return {scale(r0), scale(s0), scale(t0)};
}

FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& mod, long long p) {
    FpPoly r{1};
    base = fp_divmod(base, mod, p).second;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = fp_divmod(fp_mul(r, base, p), mod, p).second;
        base = fp_divmod(fp_mul(base, base, p), mod, p).second;
        e >>= 1;
    }
    return r;
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

void equal_degree_split(const FpPoly& g, int d, long long p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (fp_deg(g) == d) {
        out.push_back(g);
        return;
    }
    Integer e = (boost::multiprecision::pow(Integer(p), d) - 1) / 2;
    for (;;) {
        FpPoly a(fp_deg(g));
        for (auto& x : a) x = static_cast<long long>(rng() % static_cast<unsigned long long>(p));
        fp_trim(a);
        if (fp_deg(a) < 1) continue;
        FpPoly b = fp_sub(fp_powmod(a, e, g, p), FpPoly{1}, p);
        FpPoly c = fp_gcd(g, b, p);
        if (fp_deg(c) > 0 && fp_deg(c) < fp_deg(g)) {
            equal_degree_split(c, d, p, rng, out);
            equal_degree_split(fp_monic(fp_divmod(g, c, p).first, p), d, p, rng, out);
            return;
        }
    }
}

// Monic irreducible factors of a monic square-free polynomial over Z/p, p odd.
std::vector<FpPoly> fp_factor(FpPoly f, long long p) {
    std::mt19937_64 rng(0x5eed1234ULL + static_cast<unsigned long long>(p));
    std::vector<FpPoly> out;
    FpPoly x{0, 1};
    FpPoly h = x;
    int d = 0;
    while (fp_deg(f) >= 2 * (d + 1)) {
        ++d;
        h = fp_powmod(h, Integer(p), f, p);
        FpPoly g = fp_gcd(f, fp_sub(h, x, p), p);
        if (fp_deg(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            f = fp_monic(fp_divmod(f, g, p).first, p);
            h = fp_divmod(h, f, p).second;
        }
    }
    if (fp_deg(f) > 0) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime_small(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Integer polynomials modulo M, coefficients in [0, M).
ZPoly zmod(const ZPoly& a, const Integer& m) {
    std::vector<Integer> v;
    for (const auto& x : a.c) v.push_back(mod_pos(x, m));
    return ZPoly(std::move(v));
}

ZPoly zsym(const ZPoly& a, const Integer& m) {
    std::vector<Integer> v;
    Integer half = m / 2;
    for (const auto& x : a.c) {
        Integer r = mod_pos(x, m);
        if (r > half) r -= m;
        v.push_back(r);
    }
    return ZPoly(std::move(v));
}

ZPoly z_from_fp(const FpPoly& a) {
    std::vector<Integer> v;
    for (long long x : a) v.emplace_back(x);
    return ZPoly(std::move(v));
}

// Lift F == g h (mod p), g,h monic and coprime mod p, to modulus p^k.
void hensel_pair(const ZPoly& F, ZPoly& g, ZPoly& h, long long p, int k) {
    FpPoly gp = fp_from(g, p), hp = fp_from(h, p);
    auto [one, s, t] = fp_ext_gcd(gp, hp, p);
    Integer q = p;
    for (int j = 1; j < k; ++j) {
        Integer q1 = q * p;
        ZPoly e = zmod(F - g * h, q1);
        std::vector<Integer> ev;
        for (const auto& x : e.c) ev.push_back(x / q);
        FpPoly ep = fp_from(ZPoly(std::move(ev)), p);
        FpPoly dg = fp_divmod(fp_mul(t, ep, p), fp_from(g, p), p).second;
        FpPoly dh = fp_divmod(fp_mul(s, ep, p), fp_from(h, p), p).second;
        g = zmod(g + q * z_from_fp(dg), q1);
        h = zmod(h + q * z_from_fp(dh), q1);
        q = q1;
    }
}

std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
    if (f.degree() <= 1) return {f};
    int n = f.degree();
    // Choose the good prime (among the first few) giving the fewest modular factors.
    long long best_p = 0;
    std::vector<FpPoly> best;
    int tried = 0;
    for (long long p = 3; tried < 5 && p < 100000; p += 2) {
        if (!is_prime_small(p)) continue;
        FpPoly fp = fp_from(f, p);
        if (fp_deg(fp) != n) continue;
        FpPoly dfp = fp_from(f.derivative(), p);
        if (fp_deg(fp_gcd(fp, dfp, p)) != 0) continue;
        ++tried;
        auto fac = fp_factor(fp_monic(fp, p), p);
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = fac;
        }
        if (best.size() == 1) break;
    }
    require(best_p != 0, ErrorCode::Internal, "no suitable prime for factorization");
    if (best.size() == 1) return {f};
    long long p = best_p;

    Integer maxc = 0;
    for (const auto& x : f.c) maxc = std::max(maxc, abs_int(x));
    Integer bound = (Integer(1) << n) * (n + 1) * maxc * abs_int(f.lead()) * 2;
    int k = 1;
    Integer M = p;
    while (M <= bound) {
        M *= p;
        ++k;
    }
    // Monic image of f modulo M.
    Integer lc = f.lead();
    Integer lcinv;
    {
        Integer a = mod_pos(lc, M);
        mpz_t r;
        mpz_init(r);
        mpz_invert(r, a.backend().data(), M.backend().data());
        lcinv = Integer(r);
        mpz_clear(r);
    }
    ZPoly F = zmod(lcinv * f, M);
    std::vector<ZPoly> lifted;
    ZPoly rest = F;
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        FpPoly tail{1};
        for (std::size_t j = i + 1; j < best.size(); ++j) tail = fp_mul(tail, best[j], p);
        ZPoly g = z_from_fp(best[i]), h = z_from_fp(tail);
        hensel_pair(rest, g, h, p, k);
        lifted.push_back(g);
        rest = h;
    }
    lifted.push_back(rest);

    std::vector<ZPoly> out;
    ZPoly cur = f;
    std::vector<int> remaining(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) remaining[i] = static_cast<int>(i);
    int d = 1;
    while (2 * d <= static_cast<int>(remaining.size())) {
        bool found = false;
        std::vector<int> idx(d);
        for (int i = 0; i < d; ++i) idx[i] = i;
        int r = static_cast<int>(remaining.size());
        for (;;) {
            ZPoly g = ZPoly::constant(cur.lead());
            for (int i : idx) g = zmod(g * lifted[remaining[i]], M);
            g = primitive_part(zsym(g, M));
            ZPoly q;
            if (g.degree() >= 1 && divides_exactly(cur, g, &q)) {
                out.push_back(g);
                cur = q;
                std::vector<int> keep;
                for (int i = 0; i < r; ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
                remaining = keep;
                found = true;
                break;
            }
            int pos = d - 1;
            while (pos >= 0 && idx[pos] == r - d + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++d;
    }
    cur = primitive_part(cur);
    if (cur.degree() >= 1) out.push_back(cur);
    return out;
}

}  // namespace

Factorization factor(const ZPoly& p) {
    require(!p.is_zero(), ErrorCode::InvalidInput, "cannot factor the zero polynomial");
    Factorization out;
    out.unit = content(p) * (p.lead() < 0 ? -1 : 1);
    ZPoly prim = primitive_part(p);
    for (const auto& [s, mult] : squarefree_decomposition(prim))
        for (const auto& f : factor_squarefree(s)) out.factors.emplace_back(f, mult);
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

namespace {

template <class T>
std::string poly_string(const std::vector<T>& c, char var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        T a = c[k];
        bool neg = a < 0;
        if (neg) a = -a;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? "-" : "+");
        first = false;
        bool unit = (a == 1);
        if (!unit || k == 0) os << to_string(a);
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace

std::string to_string(const ZPoly& p, char var) { return poly_string(p.c, var); }
std::string to_string(const QPoly& p, char var) { return poly_string(p.c, var); }

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(std::map<long, Integer> coeffs) {
    for (auto& [e, a] : coeffs)
        if (a != 0) coeffs_.emplace(e, std::move(a));
}

LaurentPoly LaurentPoly::from_poly(const ZPoly& p, long shift) {
    std::map<long, Integer> m;
    for (std::size_t k = 0; k < p.c.size(); ++k)
        if (p.c[k] != 0) m[static_cast<long>(k) + shift] = p.c[k];
    return LaurentPoly(std::move(m));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    std::map<long, Integer> m;
    for (const auto& [e1, a] : coeffs_)
        for (const auto& [e2, b] : o.coeffs_) m[e1 + e2] += a * b;
    return LaurentPoly(std::move(m));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    std::map<long, Integer> m = coeffs_;
    for (const auto& [e, b] : o.coeffs_) m[e] += b;
    return LaurentPoly(std::move(m));
}

LaurentPoly LaurentPoly::normalized() const {
    if (coeffs_.empty()) return *this;
    long lo = coeffs_.begin()->first;
    int s = coeffs_.rbegin()->second < 0 ? -1 : 1;
    std::map<long, Integer> m;
    for (const auto& [e, a] : coeffs_) m[e - lo] = s * a;
    return LaurentPoly(std::move(m));
}

ZPoly LaurentPoly::to_poly() const {
    LaurentPoly n = normalized();
    if (n.coeffs_.empty()) return ZPoly();
    std::vector<Integer> v(n.coeffs_.rbegin()->first + 1);
    for (const auto& [e, a] : n.coeffs_) v[e] = a;
    return ZPoly(std::move(v));
}

bool LaurentPoly::equal_up_to_units(const LaurentPoly& o) const { return normalized() == o.normalized(); }

Integer LaurentPoly::eval(const Integer& t) const {
    require(t == 1 || t == -1, ErrorCode::Internal, "Laurent evaluation only at units");
    Integer acc = 0;
    for (const auto& [e, a] : coeffs_) acc += (t == -1 && (e % 2 != 0)) ? Integer(-a) : a;
    return acc;
}

bool LaurentPoly::is_symmetric() const {
    ZPoly p = to_poly();
    return p.reciprocal() == p || p.reciprocal() == -p;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Integer a = it->second;
        bool neg = a < 0;
        if (neg) a = -a;
        os << (first ? (neg ? "-" : "") : (neg ? "-" : "+"));
        first = false;
        if (a != 1 || it->first == 0) os << a;
        if (it->first == 1) os << 't';
        else if (it->first != 0) os << "t^" << it->first;
    }
    return os.str();
}

}  // namespace dslice
