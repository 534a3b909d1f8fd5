#include "dslice/families.hpp"

#include <algorithm>

#include "dslice/errors.hpp"

namespace dslice {

long long step_eval(const StepSignature& sig, const ExactAngle& omega) {
    long long v = 0;
    for (const auto& j : sig.jumps) {
        if (angle_less(j.angle, omega)) {
            v += j.delta;
            continue;
        }
        if (!angle_less(omega, j.angle))
            fail(ErrorCode::JumpPoint, "angle " + to_string(omega) + " is a jump of the signature function");
        break;
    }
    return v;
}

Integer sum_over_roots(const StepSignature& sig, long long p) {
    require(p >= 2, ErrorCode::InvalidInput, "sum over roots needs p >= 2");
    Integer total = 0;
    // r = 0 contributes sigma(0) = 0
    for (long long r = 1; 2 * r < p; ++r) total += 2 * step_eval(sig, turn(r, p));
    if (p % 2 == 0) total += step_eval(sig, turn(1, 2));
    return total;
}

StepSignature step_add(const StepSignature& a, const StepSignature& b) {
    StepSignature out = a;
    for (const auto& j : b.jumps) {
        auto it = out.jumps.begin();
        while (it != out.jumps.end() && angle_less(it->angle, j.angle)) ++it;
        if (it != out.jumps.end() && angle_equal(it->angle, j.angle)) {
            it->delta += j.delta;
            if (it->delta == 0) out.jumps.erase(it);
        } else {
            out.jumps.insert(it, j);
        }
    }
    return out;
}

StepSignature step_scale(const StepSignature& a, const Integer& k) {
    if (k == 0) return {};
    StepSignature out = a;
    for (auto& j : out.jumps) {
        Integer d = Integer(j.delta) * k;
        require(fits_int64(d), ErrorCode::CapExceeded, "signature jump exceeds 64 bits");
        j.delta = static_cast<long long>(to_int64(d));
    }
    return out;
}

StepSignature step_mirror(const StepSignature& a) { return step_scale(a, -1); }

StepSignature p_m_signature(const Integer& m) {
    require(m >= 1, ErrorCode::InvalidInput, "P_m needs m >= 1");
    return StepSignature{{Jump{theta_cos(m), 2}}};
}

KnotExprPtr atom(const CatalogKnot& k) {
    auto e = std::make_shared<KnotExpr>();
    e->name = k.name;
    e->seifert = k.seifert;
    e->crossings = k.crossing_number;
    e->arf_flag = k.arf_flag;
    return e;
}

KnotExprPtr signature_atom(const std::string& name, const StepSignature& sig, std::optional<int> arf_flag) {
    auto e = std::make_shared<KnotExpr>();
    e->name = name;
    e->signature_model = sig;
    e->arf_flag = arf_flag;
    return e;
}

KnotExprPtr p_m_atom(const Integer& m) { return signature_atom("P_" + m.str(), p_m_signature(m), 0); }

KnotExprPtr sum(std::vector<KnotExprPtr> children, std::vector<Integer> multiplicities) {
    require(children.size() == multiplicities.size(), ErrorCode::InvalidInput,
            "sum needs one multiplicity per summand");
    auto e = std::make_shared<KnotExpr>();
    e->kind = KnotExpr::Kind::Sum;
    e->children = std::move(children);
    e->multiplicities = std::move(multiplicities);
    return e;
}

KnotExprPtr mirror_of(KnotExprPtr child) {
    auto e = std::make_shared<KnotExpr>();
    e->kind = KnotExpr::Kind::Mirror;
    e->children = {std::move(child)};
    return e;
}

KnotExprPtr infect(KnotExprPtr pattern, const std::string& axis, long long winding, KnotExprPtr companion) {
    auto e = std::make_shared<KnotExpr>();
    e->kind = KnotExpr::Kind::Infect;
    e->children = {std::move(pattern), std::move(companion)};
    e->axis = axis;
    e->winding = winding;
    return e;
}

int expr_depth(const KnotExpr& e) {
    if (e.kind == KnotExpr::Kind::Atom) return 0;
    int d = 0;
    for (const auto& c : e.children) d = std::max(d, expr_depth(*c));
    return d + 1;
}

std::string to_string(const KnotExpr& e) {
    switch (e.kind) {
        case KnotExpr::Kind::Atom:
            return e.name;
        case KnotExpr::Kind::Mirror:
            return "-(" + to_string(*e.children[0]) + ")";
        case KnotExpr::Kind::Infect:
            return to_string(*e.children[0]) + "(" + e.axis + "; " + to_string(*e.children[1]) + ")";
        case KnotExpr::Kind::Sum: {
            if (e.children.empty()) return "unknot";
            std::string s;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) s += " # ";
                std::string c = to_string(*e.children[i]);
                if (e.multiplicities[i] == 1)
                    s += c;
                else
                    s += e.multiplicities[i].str() + "*(" + c + ")";
            }
            return s;
        }
    }
    return "";
}

ExprInvariants expr_invariants(const KnotExpr& e) {
    ExprInvariants out;
    switch (e.kind) {
        case KnotExpr::Kind::Atom:
            if (e.seifert) {
                out.alexander = alexander_polynomial(*e.seifert);
                out.step_signature = catalog_step_signature(*e.seifert);
                out.arf = e.arf_flag ? *e.arf_flag : arf(*e.seifert);
            } else {
                out.step_signature = e.signature_model ? *e.signature_model : StepSignature{};
                out.arf = e.arf_flag;
            }
            if (e.crossings) out.crossing_bound = Integer(*e.crossings);
            return out;
        case KnotExpr::Kind::Mirror: {
            out = expr_invariants(*e.children[0]);
            if (out.step_signature) out.step_signature = step_mirror(*out.step_signature);
            return out;
        }
        case KnotExpr::Kind::Infect: {
            require(e.winding == 0, ErrorCode::Unsupported, "infection with nonzero winding number");
            ExprInvariants p = expr_invariants(*e.children[0]);
            expr_invariants(*e.children[1]);
            out.alexander = p.alexander;
            out.step_signature = p.step_signature;
            out.arf = p.arf;
            return out;
        }
        case KnotExpr::Kind::Sum: {
            out.alexander = LaurentPoly::one();
            out.step_signature = StepSignature{};
            out.crossing_bound = Integer(0);
            out.arf = 0;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                ExprInvariants c = expr_invariants(*e.children[i]);
                const Integer& k = e.multiplicities[i];
                Integer ak = abs_int(k);
                if (out.alexander && c.alexander) {
                    for (Integer j = 0; j < ak; ++j) out.alexander = *out.alexander * *c.alexander;
                } else if (ak != 0) {
                    out.alexander.reset();
                }
                if (out.step_signature && c.step_signature)
                    out.step_signature = step_add(*out.step_signature, step_scale(*c.step_signature, k));
                else if (k != 0)
                    out.step_signature.reset();
                if (out.crossing_bound && c.crossing_bound)
                    *out.crossing_bound += ak * *c.crossing_bound;
                else if (k != 0)
                    out.crossing_bound.reset();
                if (out.arf && c.arf)
                    out.arf = (*out.arf + static_cast<int>(ak % 2) * *c.arf) % 2;
                else if (ak % 2 != 0)
                    out.arf.reset();
            }
            if (out.alexander) out.alexander = out.alexander->normalized();
            return out;
        }
    }
    return out;
}

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Interleaving interleave(const Integer& a, int count, const InterleaveOptions& opts) {
    require(a >= 0, ErrorCode::InvalidInput, "A must be non-negative");
    require(count >= 1, ErrorCode::InvalidInput, "count must be at least 1");
    Interleaving out;
    out.m.push_back(1);
    Integer floor_p = a;
    for (int i = 0; i < count; ++i) {
        const Integer& mi = out.m.back();
        ExactAngle theta_i = theta_cos(mi);
        require(fits_int64(floor_p), ErrorCode::CapExceeded, "prime search start exceeds 64 bits");
        long long p = static_cast<long long>(to_int64(floor_p)) + 1;
        for (;; ++p) {
            require(p <= opts.prime_limit, ErrorCode::CapExceeded,
                    "no admissible prime below " + std::to_string(opts.prime_limit));
            if (!is_prime(p)) continue;
            try {
                if (angle_less(turn(1, p), theta_i)) break;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Undecidable) throw;
            }
        }
        ExactAngle bound = turn(1, p);
        // theta_m decreases with m: gallop, then bisect for the first m below 2 pi / p.
        Integer lo = mi, step = 1, hi = mi + 1;
        while (!angle_less(theta_cos(hi), bound)) {
            lo = hi;
            step *= 2;
            hi = mi + step;
        }
        while (hi - lo > 1) {
            Integer mid = (lo + hi) / 2;
            if (angle_less(theta_cos(mid), bound))
                hi = mid;
            else
                lo = mid;
        }
        out.p.push_back(p);
        out.m.push_back(hi);
        floor_p = p;
    }
    return out;
}

namespace {

StepSignature j0_signature_from(const Integer& m_lo, const Integer& m_hi, const Integer& n) {
    return step_add(step_scale(p_m_signature(m_hi), n), step_scale(p_m_signature(m_lo), -n));
}

KnotExprPtr j0_expr_from(const Integer& m_lo, const Integer& m_hi, const Integer& n) {
    return sum({p_m_atom(m_hi), mirror_of(p_m_atom(m_lo))}, {n, n});
}

}  // namespace

J0Family build_J0(const Rational& c0, const Integer& a, int count) {
    require(c0 >= 0, ErrorCode::InvalidInput, "C0 must be non-negative");
    J0Family fam;
    fam.c0 = c0;
    fam.a = a;
    fam.n_copies = floor_rat(c0 / 4) + 1;
    fam.params = interleave(a, count);
    for (int i = 0; i < count; ++i) {
        J0Member mem;
        mem.signature = j0_signature_from(fam.params.m[i], fam.params.m[i + 1], fam.n_copies);
        mem.expr = j0_expr_from(fam.params.m[i], fam.params.m[i + 1], fam.n_copies);
        mem.own_sum = sum_over_roots(mem.signature, to_int64(fam.params.p[i]));
        require(Rational(mem.own_sum) > c0, ErrorCode::Internal,
                "J_0^" + std::to_string(i + 1) + ": root sum " + mem.own_sum.str() + " does not exceed C0");
        for (int j = 0; j < i; ++j) {
            Integer s = sum_over_roots(mem.signature, to_int64(fam.params.p[j]));
            require(s == 0, ErrorCode::Internal,
                    "J_0^" + std::to_string(i + 1) + ": nonzero root sum at p_" + std::to_string(j + 1));
            mem.earlier_sums.push_back(s);
        }
        fam.members.push_back(std::move(mem));
    }
    return fam;
}

FamilySpec generate_family(int m, int n, int count, const Rational& c0, const Integer& a,
                           const FamilyInput& input, const J0Flags& flags, const Catalog& cat) {
    require(m >= 1 && n >= 1, ErrorCode::InvalidInput, "m and n must be at least 1");
    cat.get(input.knot);
    J0Family fam = build_J0(c0, a, count);
    FamilySpec spec;
    spec.m = m;
    spec.n = n;
    spec.inputs = {input};
    spec.j0 = flags;
    spec.c0 = c0;
    spec.a = a;
    spec.count = count;
    spec.n_copies = fam.n_copies;
    spec.primes = fam.params.p;
    spec.twist_params = fam.params.m;
    return spec;
}

const FamilyInput& input_for(const FamilySpec& spec, int k) {
    require(!spec.inputs.empty(), ErrorCode::InvalidInput, "family has no input knots K_k");
    if (spec.inputs.size() == 1) return spec.inputs[0];
    require(k >= 0 && k < static_cast<int>(spec.inputs.size()), ErrorCode::InvalidInput,
            "no input knot K_" + std::to_string(k));
    return spec.inputs[k];
}

namespace {

void check_index(const FamilySpec& spec, int i) {
    require(i >= 1 && i <= spec.count, ErrorCode::InvalidInput, "family index out of range");
    require(static_cast<int>(spec.twist_params.size()) >= i + 1 && static_cast<int>(spec.primes.size()) >= i,
            ErrorCode::InvalidInput, "family parameters are incomplete");
    require(spec.n_copies >= 1, ErrorCode::InvalidInput, "N must be at least 1");
}

}  // namespace

KnotExprPtr j0_expr(const FamilySpec& spec, int i) {
    check_index(spec, i);
    return j0_expr_from(spec.twist_params[i - 1], spec.twist_params[i], spec.n_copies);
}

StepSignature j0_signature(const FamilySpec& spec, int i) {
    check_index(spec, i);
    return j0_signature_from(spec.twist_params[i - 1], spec.twist_params[i], spec.n_copies);
}

KnotExprPtr build_Jmn(const FamilySpec& spec, const Catalog& cat) {
    require(spec.m >= 1 && spec.n >= 1, ErrorCode::InvalidInput, "m and n must be at least 1");
    int top = std::max(spec.m, spec.n);
    std::vector<std::string> missing;
    if (!spec.j0.grope_height2) missing.push_back("(G1)");
    bool g2 = true;
    for (int k = 0; k + 1 < top; ++k) {
        const FamilyInput& in = input_for(spec, k);
        g2 = g2 && in.ribbon && in.grope_height1;
    }
    if (!g2) missing.push_back("(G2)");
    if (!missing.empty()) {
        std::string s;
        for (const auto& h : missing) s += (s.empty() ? "" : ", ") + h;
        fail(ErrorCode::MissingHypothesis, "missing hypothesis " + s);
    }
    std::vector<KnotExprPtr> j{j0_expr(spec, spec.index)};
    for (int k = 0; k + 1 < top; ++k) {
        const FamilyInput& in = input_for(spec, k);
        j.push_back(infect(atom(cat.get(in.knot)), in.axis + "_" + std::to_string(k), 0, j.back()));
    }
    KnotExprPtr r = atom(cat.get(spec.pattern));
    return infect(infect(r, "alpha'", 0, j[spec.m - 1]), "beta'", 0, j[spec.n - 1]);
}

}  // namespace dslice
