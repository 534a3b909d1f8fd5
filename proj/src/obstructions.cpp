#include "dslice/obstructions.hpp"

#include <algorithm>

#include "dslice/errors.hpp"

namespace dslice {

Integer c_K(const Integer& crossings) {
    require(crossings >= 0, ErrorCode::InvalidInput, "crossing number must be non-negative");
    return Integer(69713280) * crossings;
}

Integer rho_abelian(const StepSignature& sig, long long p) { return sum_over_roots(sig, p); }

Integer solvency_threshold(const FamilySpec& spec, const Catalog& cat) {
    Integer t = 0;
    int top = std::max(spec.m, spec.n);
    for (int k = 0; k + 1 < top; ++k) t += c_K(cat.get(input_for(spec, k).knot).crossing_number);
    return t;
}

namespace {

std::map<std::string, bool> echo_flags(const FamilySpec& spec) {
    bool ribbon = true, g2 = true, n1 = true;
    int top = std::max(spec.m, spec.n);
    for (int k = 0; k + 1 < top; ++k) {
        const FamilyInput& in = input_for(spec, k);
        ribbon = ribbon && in.ribbon;
        g2 = g2 && in.grope_height1;
        n1 = n1 && in.cyclic_alexander;
    }
    return {{"G1", spec.j0.grope_height2},
            {"G2", ribbon && g2},
            {"N1", n1},
            {"N2", spec.j0.from_lemma},
            {"arf_zero", spec.j0.arf_zero}};
}

void require_flags(const std::map<std::string, bool>& flags, const std::vector<std::string>& names) {
    std::string missing;
    for (const auto& n : names)
        if (!flags.at(n)) missing += (missing.empty() ? "(" : ", (") + n + ")";
    if (!missing.empty()) fail(ErrorCode::MissingHypothesis, "missing hypothesis " + missing);
}

/// P_+ = H_{k} . H_{k-1} ... H_0 . H for one side of the construction.
std::pair<std::vector<long long>, HalfInt> product_audit(int side) {
    GropeTree h = model_grope(2, 1, HalfInt::of(2), 1);
    GropeTree hk = model_grope(1, 1, HalfInt::of(1), 1);
    std::vector<long long> factors{2};
    GropeTree acc = h;
    for (int k = 0; k + 1 < side; ++k) {
        acc = product(hk, acc);
        factors.insert(factors.begin(), 1);
    }
    acc = product(hk, acc);
    factors.insert(factors.begin(), 1);
    return {factors, grope_height(acc)};
}

}  // namespace

MembershipCertificate certify_membership(const FamilySpec& spec, bool nonmembership_claimed, const Catalog& cat) {
    auto flags = echo_flags(spec);
    std::vector<std::string> needed{"G1", "G2"};
    if (nonmembership_claimed) {
        needed.push_back("N1");
        needed.push_back("N2");
    }
    require_flags(flags, needed);
    KnotExprPtr j = build_Jmn(spec, cat);
    MembershipCertificate c;
    c.knot = to_string(*j);
    c.index = spec.index;
    c.grope_heights = {HalfInt::of(spec.m + 2), HalfInt::of(spec.n + 2)};
    c.whitney_heights = c.grope_heights;
    c.solvable_heights = {HalfInt::of(spec.m), HalfInt::of(spec.n)};
    c.hypotheses = flags;
    c.chain = {
        "satellite construction: with (G1) and (G2), J_{m,n} bounds a pi_1-unknotted capped grope of height (m+2, n+2)",
        "gropes to towers: a height (a, b) grope slice knot is height (a, b) Whitney slice",
        "towers to solutions: a height (a+2, b+2) Whitney slice knot is (a, b)-solvable",
    };
    auto [factors, h] = product_audit(std::max(spec.m, spec.n));
    c.audit_factors = factors;
    c.audit_height = h;
    require(h == HalfInt::of(std::max(spec.m, spec.n) + 2), ErrorCode::Internal,
            "product height audit gives " + h.str());
    return c;
}

NonMembershipCertificate certify_nonmembership(const FamilySpec& spec, const std::vector<Integer>& coeffs,
                                               const Catalog& cat) {
    require(static_cast<int>(coeffs.size()) == spec.count, ErrorCode::InvalidInput,
            "expected " + std::to_string(spec.count) + " coefficients");
    auto w_it = std::find_if(coeffs.begin(), coeffs.end(), [](const Integer& a) { return a != 0; });
    require(w_it != coeffs.end(), ErrorCode::InvalidInput, "coefficients are all zero");
    require_flags(echo_flags(spec), {"N1", "N2"});
    NonMembershipCertificate c;
    c.m = spec.m;
    c.n = spec.n;
    c.coefficients = coeffs;
    int w = static_cast<int>(w_it - coeffs.begin()) + 1;
    c.leading_index = w;
    c.mirrored = coeffs[w - 1] < 0;
    Integer sign = c.mirrored ? -1 : 1;
    c.prime = spec.primes[w - 1];
    long long p = to_int64(c.prime);
    c.own_sum = rho_abelian(j0_signature(spec, w), p);
    Integer total = sign * coeffs[w - 1] * c.own_sum;
    for (int i = w + 1; i <= spec.count; ++i) {
        if (coeffs[i - 1] == 0) continue;
        Integer s = rho_abelian(j0_signature(spec, i), p);
        require(s == 0, ErrorCode::Internal,
                "J_0^" + std::to_string(i) + " has nonzero root sum at p_" + std::to_string(w));
        c.later_sums.push_back(s);
        total += sign * coeffs[i - 1] * s;
    }
    c.signature_sum = total;
    c.threshold = Rational(solvency_threshold(spec, cat));
    c.margin = Rational(c.own_sum) - c.threshold;
    c.excluded_levels = {{HalfInt::half_above(spec.m), HalfInt::of(spec.n)},
                         {HalfInt::of(spec.m), HalfInt::half_above(spec.n)}};
    if (c.margin <= 0)
        fail(ErrorCode::NoCertificate, "margin " + to_string(c.margin) + " is not positive; no certificate");
    return c;
}

ReportEntry report_entry(const MembershipCertificate& c) {
    ReportEntry e;
    e.label = c.knot;
    e.inside_grope.push_back(c.grope_heights);
    return e;
}

void add_to_entry(ReportEntry& e, const NonMembershipCertificate& c) {
    for (const auto& l : c.excluded_levels) e.outside_solvable.push_back(l);
}

namespace {

bool dominated(const HalfInt& a, const HalfInt& b, const HeightPair& by, long long shift) {
    // (a, b) <= by - (shift, shift)
    return a.twice <= by.first.twice - 2 * shift && b.twice <= by.second.twice - 2 * shift;
}

bool dominates(const HalfInt& a, const HalfInt& b, const HeightPair& by, long long shift) {
    return a.twice >= by.first.twice + 2 * shift && b.twice >= by.second.twice + 2 * shift;
}

}  // namespace

BifiltrationGrid bifiltration_report(const std::vector<ReportEntry>& entries, long long max_level) {
    BifiltrationGrid g;
    for (long long t = 0; t <= 2 * max_level; ++t) g.levels.push_back(HalfInt::from_twice(t));
    std::size_t n = g.levels.size();
    for (const auto& e : entries) {
        for (const char* f : {"G", "W", "F"}) {
            std::string fil = f;
            auto& grid = g.status[e.label][fil];
            grid.assign(n, std::vector<CellStatus>(n, CellStatus::Unknown));
            long long in_shift = fil == "F" ? 2 : 0;
            long long out_shift = fil == "F" ? 0 : 2;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t col = 0; col < n; ++col) {
                    const HalfInt& a = g.levels[r];
                    const HalfInt& b = g.levels[col];
                    bool inside = e.slice;
                    for (const auto& hp : e.inside_grope) inside = inside || dominated(a, b, hp, in_shift);
                    bool outside = false;
                    for (const auto& hp : e.outside_solvable) outside = outside || dominates(a, b, hp, out_shift);
                    require(!(inside && outside), ErrorCode::Internal,
                            e.label + ": level " + fil + "(" + a.str() + ", " + b.str() + ") is both inside and outside");
                    grid[r][col] = inside ? CellStatus::Inside : outside ? CellStatus::Outside : CellStatus::Unknown;
                }
        }
    }
    return g;
}

std::string render_grid(const BifiltrationGrid& g) {
    std::string out;
    for (const auto& [label, fils] : g.status) {
        out += label + "\n";
        for (const char* f : {"G", "W", "F"}) {
            const auto& grid = fils.at(f);
            out += "  " + std::string(f) + "  rows: first height, columns: second height\n      ";
            for (const auto& l : g.levels) {
                std::string s = l.str();
                out += std::string(s.size() < 4 ? 4 - s.size() : 0, ' ') + s;
            }
            out += "\n";
            for (std::size_t r = 0; r < g.levels.size(); ++r) {
                std::string s = g.levels[r].str();
                out += "  " + std::string(s.size() < 4 ? 4 - s.size() : 0, ' ') + s;
                for (std::size_t c = 0; c < g.levels.size(); ++c) {
                    CellStatus st = grid[r][c];
                    out += st == CellStatus::Inside ? "   +" : st == CellStatus::Outside ? "   -" : "   .";
                }
                out += "\n";
            }
        }
    }
    return out;
}

}  // namespace dslice
