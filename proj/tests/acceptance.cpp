// Acceptance criteria: one PASS/FAIL line each, exit status 1 on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "dslice/errors.hpp"
#include "dslice/io.hpp"
#include "support.hpp"

using namespace dslice;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

struct Check {
    bool ok = true;
    std::string why;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

void report(int id, const char* name, double limit_ms, const std::function<void(Check&)>& body) {
    Check c;
    auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    c.expect(ms < limit_ms, "too slow");
    if (!c.ok) ++failures;
    std::printf("%s %2d %-28s %10.3f ms (limit %g ms)%s%s\n", c.ok ? "PASS" : "FAIL", id, name, ms, limit_ms,
                c.ok ? "" : "  ", c.why.c_str());
    std::fflush(stdout);
}

FamilySpec family(int m, int n, int count, const Rational& c0) {
    FamilyInput in;
    in.ribbon = in.grope_height1 = in.cyclic_alexander = true;
    J0Flags f;
    f.grope_height2 = f.arf_zero = f.from_lemma = true;
    return generate_family(m, n, count, c0, 2, in, f);
}

/// 2 * #{1 <= r < p : cos(2 pi r / p) < cos theta_m}, in long double.
long long hand_sum_pm(long long m, long long p) {
    const long double pi = std::acos(-1.0L);
    long double c = 1.0L - 1.0L / (2.0L * std::cbrt(static_cast<long double>(m)));
    long long s = 0;
    for (long long r = 1; r < p; ++r)
        if (std::cos(2 * pi * r / p) < c) s += 2;
    return s;
}

std::string criterion3_json(Check& c) {
    FamilySpec s = family(1, 1, 3, Rational(3));
    c.expect(s.twist_params.at(0) == 1, "m_1 != 1");
    c.expect(s.primes.at(0) == 7, "p_1 != 7");
    J0Family f = build_J0(Rational(3), 2, 3);
    c.expect(f.members.size() == 3, "member count");
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        const J0Member& mem = f.members[i];
        Rational margin = Rational(mem.own_sum) - f.c0;
        c.expect(margin > 0 && denom(margin) == 1, "margin not a positive integer at " + std::to_string(i + 1));
        long long p = to_int64(f.params.p[i]);
        long long oracle = to_int64(f.n_copies) * (hand_sum_pm(to_int64(f.params.m[i + 1]), p) -
                                                   hand_sum_pm(to_int64(f.params.m[i]), p));
        c.expect(mem.own_sum == oracle, "own sum disagrees with the float oracle");
        c.expect(mem.earlier_sums.size() == i, "earlier sum count");
        for (std::size_t k = 0; k < i; ++k) {
            c.expect(mem.earlier_sums[k] == 0, "nonzero earlier sum");
            c.expect(sum_over_roots(mem.signature, to_int64(f.params.p[k])) == 0, "recomputed earlier sum");
        }
    }
    return canonical(family_json(s));
}

std::string criterion9_json(Check& c) {
    Integer ck = c_K(6);
    FamilySpec s = family(3, 3, 5, Rational(ck * 2));
    Json out = Json::array();
    for (int i = 1; i <= 5; ++i) {
        FamilySpec si = s;
        si.index = i;
        MembershipCertificate m = certify_membership(si, true);
        c.expect(m.grope_heights == HeightPair{HalfInt::of(5), HalfInt::of(5)}, "grope heights");
        c.expect(m.solvable_heights == HeightPair{HalfInt::of(3), HalfInt::of(3)}, "solvable heights");
        out.push_back(certificate_json(m));
    }
    int certified = 0;
    for (int mask = 1; mask < 32; ++mask) {
        std::vector<Integer> a(5);
        for (int i = 0; i < 5; ++i) a[i] = (mask >> i) & 1;
        NonMembershipCertificate n = certify_nonmembership(s, a);
        c.expect(n.margin > 0, "nonpositive margin");
        int lead = n.leading_index;
        long long p = to_int64(s.primes[lead - 1]);
        long long own = hand_sum_pm(to_int64(s.twist_params[lead]), p) - hand_sum_pm(to_int64(s.twist_params[lead - 1]), p);
        c.expect(n.own_sum == s.n_copies * own, "own sum disagrees with the float oracle");
        c.expect(n.margin == Rational(n.own_sum) - Rational(ck * 2), "margin != own sum - threshold");
        out.push_back(certificate_json(n));
        ++certified;
    }
    c.expect(certified == 31, "not all 31 combinations certified");
    return canonical(out);
}

int formula_handles(const Level& l) {
    switch (l.type) {
        case Level::Type::A: return 2 * l.param - 1;
        case Level::Type::B: return 0;
        case Level::Type::R: return l.param - 1;
        case Level::Type::S: return 1;
    }
    return -1;
}

void load_caps(Surface& s) {
    for (auto& p : s.pairs)
        for (Side side : {Side::L, Side::R}) {
            Branch& b = p.side(side);
            if (b.is_cap()) {
                if (b.cap.intersections.empty()) b.cap.intersections.push_back(SheetRef::strand("K"));
            } else {
                load_caps(b.surface());
            }
        }
}

}  // namespace

int main() {
    report(1, "constants c_K(6)", 1, [](Check& c) { c.expect(c_K(6) == Integer(418279680), "c_K(6)"); });

    report(2, "alexander polynomials", 10, [](Check& c) {
        const Catalog& cat = Catalog::builtin();
        LaurentPoly d61 = alexander_polynomial(cat.get("6_1").seifert);
        LaurentPoly d946 = alexander_polynomial(cat.get("9_46").seifert);
        ZPoly expect61(std::vector<Integer>{2, -5, 2});
        ZPoly expect946 = ZPoly(std::vector<Integer>{-1, 2}) * ZPoly(std::vector<Integer>{-2, 1});
        c.expect(d61.equal_up_to_units(LaurentPoly::from_poly(expect61)), "6_1");
        c.expect(d946.equal_up_to_units(LaurentPoly::from_poly(expect946)), "9_46");
        c.expect(d61.to_poly() == oracle::alexander(cat.get("6_1").seifert.matrix()), "6_1 oracle");
        c.expect(d946.to_poly() == oracle::alexander(cat.get("9_46").seifert.matrix()), "9_46 oracle");
    });

    std::string json3;
    report(3, "J_0 pipeline C0=3 A=2", 10000, [&](Check& c) { json3 = criterion3_json(c); });

    report(4, "step-signature sums", 100, [](Check& c) {
        StepSignature p1 = p_m_signature(1);
        for (long long p : {5LL, 7LL}) {
            Integer s = sum_over_roots(p1, p);
            c.expect(s == 8, "sum_over_roots(P_1, " + std::to_string(p) + ") != 8");
            c.expect(s == hand_sum_pm(1, p), "hand oracle at " + std::to_string(p));
        }
    });

    report(5, "handle calculus", 1000, [](Check& c) {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> len(0, 12), type(0, 3), param(1, 8);
        for (int t = 0; t < 200; ++t) {
            AbrsSchedule s;
            int n = len(rng);
            for (int i = 0; i < n; ++i) {
                switch (type(rng)) {
                    case 0: s.push_back({Level::Type::A, param(rng)}); break;
                    case 1: s.push_back({Level::Type::B, 0}); break;
                    case 2: s.push_back({Level::Type::R, param(rng)}); break;
                    default: s.push_back({Level::Type::S, 0}); break;
                }
            }
            long long total = 0;
            for (const Level& l : s) {
                c.expect(level_handles(l) == formula_handles(l), "formula at " + l.str());
                c.expect(level_handles(l) == -level_euler_characteristic(l), "euler at " + l.str());
                total += formula_handles(l);
            }
            c.expect(handle_count(s) == total, "schedule total");
        }
    });

    report(6, "height laws", 5000, [](Check& c) {
        std::mt19937_64 rng(6);
        oracle::GropeGen gen{rng};
        gen.max_hits = 1;
        std::uniform_int_distribution<int> hd(1, 3);
        for (int i = 0; i < 100; ++i) {
            GropeTree g2 = gen(rng() % 2 ? 1 : 2);
            load_caps(g2.base);
            GropeTree g1 = model_grope(1, 1 + static_cast<int>(rng() % 2), HalfInt::of(hd(rng)), 1);
            c.expect(grope_height(product(g1, g2)) == grope_height(g1) + grope_height(g2), "product");
        }
        for (int i = 0; i < 100; ++i) {
            GropeTree g = gen(rng() % 2 ? 0 : 1);
            HalfInt h = grope_height(g);
            c.expect(h.twice == oracle::height_twice(g.base), "height oracle");
            c.expect(grope_height(split(g).tree) == h, "split");
            c.expect(grope_height(push_down_all(g).tree) == h, "push_down");
            GropeToTower t = schneiderman(g);
            c.expect(tower_height(t.tower) == h, "schneiderman to tower");
            c.expect(grope_height(schneiderman(t.tower).grope) == h, "schneiderman to grope");
            for (long long target = h.twice - 1; target >= 2; --target)
                c.expect(grope_height(lower_height(g, HalfInt::from_twice(target)).tree) == HalfInt::from_twice(target),
                         "lower_height");
        }
    });

    report(7, "branched covers", 5000, [](Check& c) {
        const Catalog& cat = Catalog::builtin();
        for (const auto& [name, k] : cat.knots()) {
            for (int n = 2; n <= 6; ++n) {
                Integer res = cover_order_by_resultant(k.seifert, n);
                long long fl = oracle::cover_order_float(oracle::alexander(k.seifert.matrix()), n);
                c.expect(res == fl, name + " resultant vs float at n=" + std::to_string(n));
                std::string tag = name + " n=" + std::to_string(n);
                try {
                    FinAbGroup h = branched_homology(k.seifert, n);
                    c.expect(res != 0 && h.order() == res, tag + ": order != resultant");
                } catch (const Error& e) {
                    c.expect(res == 0 && e.code() == ErrorCode::InvalidInput, tag + ": unexpected error");
                }
            }
        }
        LinkedGroup g946 = linking_form_2fold(cat.get("9_46").seifert);
        c.expect(g946.group.invariant_factors == std::vector<Integer>{3, 3}, "9_46 group");
        MetabolizerResult m946 = metabolizer_split(g946.group, g946.form);
        c.expect(m946.metabolizers.size() == 2, "9_46 metabolizer count");
        c.expect(m946.splitting.has_value(), "9_46 splitting");
        LinkedGroup gt = linking_form_2fold(cat.get("trefoil").seifert);
        c.expect(gt.group.invariant_factors == std::vector<Integer>{3}, "trefoil group");
        c.expect(metabolizer_split(gt.group, gt.form).metabolizers.empty(), "trefoil metabolizers");
    });

    report(8, "hyperbolicity", 1000, [](Check& c) {
        const Catalog& cat = Catalog::builtin();
        auto h = hyperbolicity_check(cat.get("9_46").seifert, HyperbolicityMode::Shape);
        c.expect(h.kind == HyperbolicityVerdict::Kind::Hyperbolic, "9_46 shape");
        auto t = hyperbolicity_check(cat.get("trefoil").seifert, HyperbolicityMode::Factorization);
        c.expect(t.kind == HyperbolicityVerdict::Kind::FailsNecessary, "trefoil factorization");
    });

    std::string json9;
    report(9, "end-to-end certificates", 60000, [&](Check& c) { json9 = criterion9_json(c); });

    report(10, "determinism", 120000, [&](Check& c) {
        Check again;
        c.expect(!json3.empty() && criterion3_json(again) == json3, "criterion 3 JSON differs");
        c.expect(!json9.empty() && criterion9_json(again) == json9, "criterion 9 JSON differs");
    });

    return failures == 0 ? 0 : 1;
}
