#include "dslice/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "dslice/errors.hpp"

namespace dslice {

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& why) {
    fail(ErrorCode::InvalidInput, where + ": " + why);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing field '") + key + "'");
    return j.at(key);
}

long long int_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_integer()) bad(where + "/" + key, "expected an integer");
    return v.get<long long>();
}

bool bool_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_boolean()) bad(where + "/" + key, "expected true or false");
    return v.get<bool>();
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_string()) bad(where + "/" + key, "expected a string");
    return v.get<std::string>();
}

Json integers_json(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(integer_json(x));
    return a;
}

std::vector<Integer> integers_from(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    std::vector<Integer> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from(j[i], where + "/" + std::to_string(i)));
    return out;
}

Json pair_json(const HeightPair& p) { return Json::array({half_json(p.first), half_json(p.second)}); }

HeightPair pair_from(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) bad(where, "expected a pair of heights");
    return {half_from(j[0], where + "/0"), half_from(j[1], where + "/1")};
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json ref_json(const SheetRef& r) {
    if (r.is_strand) return Json{{"strand", r.name}};
    return Json{{"sheet", path_str(r.path)}};
}

Path path_from(const std::string& s, const std::string& where) {
    Path p;
    if (s == "base") return p;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '/') bad(where, "malformed path '" + s + "'");
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i || j >= s.size() || (s[j] != 'L' && s[j] != 'R')) bad(where, "malformed path '" + s + "'");
        p.push_back({std::stoi(s.substr(i, j - i)), s[j] == 'L' ? Side::L : Side::R});
        i = j + 1;
    }
    return p;
}

Json surface_json(const Surface& s);

Json branch_json(const Branch& b) {
    if (b.is_cap()) {
        Json refs = Json::array();
        for (const auto& r : b.cap.intersections) refs.push_back(ref_json(r));
        return Json{{"cap", refs}};
    }
    return Json{{"surface", surface_json(b.surface())}};
}

Json surface_json(const Surface& s) {
    Json pairs = Json::array();
    for (const auto& p : s.pairs) pairs.push_back(Json{{"left", branch_json(p.left)}, {"right", branch_json(p.right)}});
    return Json{{"pairs", pairs}};
}

Surface surface_from(const Json& j, const std::string& where);

Branch branch_from(const Json& j, const std::string& where) {
    Branch b;
    if (j.is_object() && j.contains("cap")) {
        const Json& refs = j.at("cap");
        if (!refs.is_array()) bad(where + "/cap", "expected an array");
        for (std::size_t i = 0; i < refs.size(); ++i) {
            std::string w = where + "/cap/" + std::to_string(i);
            const Json& r = refs[i];
            if (r.is_object() && r.contains("strand"))
                b.cap.intersections.push_back(SheetRef::strand(string_field(r, "strand", w)));
            else
                b.cap.intersections.push_back(SheetRef::sheet(path_from(string_field(r, "sheet", w), w)));
        }
    } else if (j.is_object() && j.contains("surface")) {
        b.sub.push_back(surface_from(j.at("surface"), where + "/surface"));
    } else {
        bad(where, "expected {\"cap\": [...]} or {\"surface\": {...}}");
    }
    return b;
}

Surface surface_from(const Json& j, const std::string& where) {
    const Json& pairs = field(j, "pairs", where);
    if (!pairs.is_array()) bad(where + "/pairs", "expected an array");
    Surface s;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        std::string w = where + "/pairs/" + std::to_string(i);
        Pair p;
        p.left = branch_from(field(pairs[i], "left", w), w + "/left");
        p.right = branch_from(field(pairs[i], "right", w), w + "/right");
        s.pairs.push_back(std::move(p));
    }
    return s;
}

}  // namespace

Json integer_json(const Integer& a) {
    if (fits_int64(a)) return Json(static_cast<long long>(to_int64(a)));
    return Json(a.str());
}

Integer integer_from(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    bad(where, "expected an integer");
}

Json rational_json(const Rational& q) { return Json{{"num", integer_json(numer(q))}, {"den", integer_json(denom(q))}}; }

Rational rational_from(const Json& j, const std::string& where) {
    Integer n = integer_from(field(j, "num", where), where + "/num");
    Integer d = integer_from(field(j, "den", where), where + "/den");
    if (d == 0) bad(where, "zero denominator");
    return Rational(n, d);
}

Json half_json(const HalfInt& h) {
    if (h.unbounded) return Json("inf");
    return rational_json(Rational(Integer(h.twice), Integer(2)));
}

HalfInt half_from(const Json& j, const std::string& where) {
    if (j.is_string() && j.get<std::string>() == "inf") return HalfInt::infinite();
    Rational q = rational_from(j, where);
    Rational t = q * 2;
    if (denom(t) != 1) bad(where, "height must be a multiple of 1/2");
    return HalfInt::from_twice(to_int64(numer(t)));
}

Json angle_json(const ExactAngle& a) {
    if (auto t = std::get_if<RationalTurn>(&a)) return Json{{"kind", "turn"}, {"r", integer_json(t->r)}, {"p", integer_json(t->p)}};
    if (auto c = std::get_if<CosRational>(&a)) return Json{{"kind", "cos"}, {"value", rational_json(c->q)}};
    const auto& b = std::get<CosCbrt>(a);
    return Json{{"kind", "cbrt"}, {"m", integer_json(b.m)}};
}

ExactAngle angle_from(const Json& j, const std::string& where) {
    std::string kind = string_field(j, "kind", where);
    if (kind == "turn")
        return turn(integer_from(field(j, "r", where), where + "/r"), integer_from(field(j, "p", where), where + "/p"));
    if (kind == "cos") return cos_angle(rational_from(field(j, "value", where), where + "/value"));
    if (kind == "cbrt") return theta_cos(integer_from(field(j, "m", where), where + "/m"));
    bad(where + "/kind", "unknown angle kind '" + kind + "'");
}

Json step_signature_json(const StepSignature& s) {
    Json a = Json::array();
    for (const auto& j : s.jumps) a.push_back(Json{{"angle", angle_json(j.angle)}, {"delta", j.delta}});
    return a;
}

StepSignature step_signature_from(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of jumps");
    StepSignature s;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string w = where + "/" + std::to_string(i);
        s.jumps.push_back({angle_from(field(j[i], "angle", w), w + "/angle"), int_field(j[i], "delta", w)});
    }
    return s;
}

Json expr_json(const KnotExpr& e) {
    switch (e.kind) {
        case KnotExpr::Kind::Atom: {
            Json j{{"type", "atom"}, {"name", e.name}};
            if (e.signature_model) j["signature_model"] = step_signature_json(*e.signature_model);
            if (e.arf_flag) j["arf"] = *e.arf_flag;
            return j;
        }
        case KnotExpr::Kind::Mirror:
            return Json{{"type", "mirror"}, {"child", expr_json(*e.children[0])}};
        case KnotExpr::Kind::Infect:
            return Json{{"type", "infect"},
                        {"pattern", expr_json(*e.children[0])},
                        {"axis", e.axis},
                        {"winding", e.winding},
                        {"companion", expr_json(*e.children[1])}};
        case KnotExpr::Kind::Sum: {
            Json terms = Json::array();
            for (std::size_t i = 0; i < e.children.size(); ++i)
                terms.push_back(Json{{"multiplicity", integer_json(e.multiplicities[i])}, {"knot", expr_json(*e.children[i])}});
            return Json{{"type", "sum"}, {"terms", terms}};
        }
    }
    return {};
}

Json knot_info_json(const CatalogKnot& k) {
    LaurentPoly d = alexander_polynomial(k.seifert);
    Json j{{"name", k.name},
           {"seifert", matrix_json(k.seifert.matrix())},
           {"genus_bound", k.seifert.genus()},
           {"crossings", k.crossing_number},
           {"alexander", d.normalized().str()},
           {"determinant", integer_json(abs_int(d.eval(Integer(-1))))},
           {"arf", arf(k.seifert)},
           {"signature", signature_at(k.seifert, turn(1, 2))}};
    auto steps = catalog_step_signature(k.seifert);
    j["step_signature"] = steps ? step_signature_json(*steps) : Json(nullptr);
    return j;
}

Json group_json(const FinAbGroup& g) {
    return Json{{"invariant_factors", integers_json(g.invariant_factors)}, {"order", integer_json(g.order())}, {"name", g.str()}};
}

Json family_json(const FamilySpec& spec, bool with_members) {
    Json inputs = Json::array();
    for (const auto& in : spec.inputs)
        inputs.push_back(Json{{"knot", in.knot},
                              {"axis", in.axis},
                              {"ribbon", in.ribbon},
                              {"grope_height1", in.grope_height1},
                              {"cyclic_alexander", in.cyclic_alexander}});
    Json j{{"type", "family"},
           {"m", spec.m},
           {"n", spec.n},
           {"index", spec.index},
           {"count", spec.count},
           {"pattern", spec.pattern},
           {"inputs", inputs},
           {"j0", Json{{"grope_height2", spec.j0.grope_height2},
                       {"arf_zero", spec.j0.arf_zero},
                       {"from_lemma", spec.j0.from_lemma}}},
           {"c0", rational_json(spec.c0)},
           {"A", integer_json(spec.a)},
           {"N", integer_json(spec.n_copies)},
           {"primes", integers_json(spec.primes)},
           {"twist_params", integers_json(spec.twist_params)}};
    if (with_members) {
        Json members = Json::array();
        for (int i = 1; i <= spec.count; ++i) {
            StepSignature sig = j0_signature(spec, i);
            Json earlier = Json::array();
            for (int k = 1; k < i; ++k) earlier.push_back(integer_json(sum_over_roots(sig, to_int64(spec.primes[k - 1]))));
            Integer own = sum_over_roots(sig, to_int64(spec.primes[i - 1]));
            members.push_back(Json{{"index", i},
                                   {"j0", to_string(*j0_expr(spec, i))},
                                   {"signature", step_signature_json(sig)},
                                   {"own_sum", integer_json(own)},
                                   {"margin", rational_json(Rational(own) - spec.c0)},
                                   {"earlier_sums", earlier}});
        }
        j["members"] = members;
    }
    return j;
}

FamilySpec family_from(const Json& j, const Catalog& cat) {
    const std::string w = "family";
    if (string_field(j, "type", w) != "family") bad(w + "/type", "expected \"family\"");
    FamilySpec spec;
    spec.m = static_cast<int>(int_field(j, "m", w));
    spec.n = static_cast<int>(int_field(j, "n", w));
    spec.index = static_cast<int>(int_field(j, "index", w));
    spec.count = static_cast<int>(int_field(j, "count", w));
    spec.pattern = string_field(j, "pattern", w);
    const Json& inputs = field(j, "inputs", w);
    if (!inputs.is_array() || inputs.empty()) bad(w + "/inputs", "expected a nonempty array");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        std::string wi = w + "/inputs/" + std::to_string(i);
        FamilyInput in;
        in.knot = string_field(inputs[i], "knot", wi);
        in.axis = string_field(inputs[i], "axis", wi);
        in.ribbon = bool_field(inputs[i], "ribbon", wi);
        in.grope_height1 = bool_field(inputs[i], "grope_height1", wi);
        in.cyclic_alexander = bool_field(inputs[i], "cyclic_alexander", wi);
        if (!cat.contains(in.knot)) bad(wi + "/knot", "unknown knot '" + in.knot + "'");
        spec.inputs.push_back(in);
    }
    const Json& j0 = field(j, "j0", w);
    spec.j0.grope_height2 = bool_field(j0, "grope_height2", w + "/j0");
    spec.j0.arf_zero = bool_field(j0, "arf_zero", w + "/j0");
    spec.j0.from_lemma = bool_field(j0, "from_lemma", w + "/j0");
    spec.c0 = rational_from(field(j, "c0", w), w + "/c0");
    spec.a = integer_from(field(j, "A", w), w + "/A");
    spec.n_copies = integer_from(field(j, "N", w), w + "/N");
    spec.primes = integers_from(field(j, "primes", w), w + "/primes");
    spec.twist_params = integers_from(field(j, "twist_params", w), w + "/twist_params");
    if (spec.m < 1 || spec.n < 1) bad(w, "m and n must be at least 1");
    if (spec.count < 1 || spec.index < 1 || spec.index > spec.count) bad(w, "index must lie in 1..count");
    J0Family fresh = build_J0(spec.c0, spec.a, spec.count);
    if (fresh.n_copies != spec.n_copies) bad(w + "/N", "does not match floor(C0/4) + 1");
    if (fresh.params.p != spec.primes) bad(w + "/primes", "do not match the interleaving");
    if (fresh.params.m != spec.twist_params) bad(w + "/twist_params", "do not match the interleaving");
    return spec;
}

Json certificate_json(const MembershipCertificate& c) {
    Json hyp = Json::object();
    for (const auto& [k, v] : c.hypotheses) hyp[k] = v;
    Json audit = Json::array();
    for (long long f : c.audit_factors) audit.push_back(f);
    return Json{{"type", "membership"},
                {"knot", c.knot},
                {"index", c.index},
                {"grope_heights", pair_json(c.grope_heights)},
                {"whitney_heights", pair_json(c.whitney_heights)},
                {"solvable_heights", pair_json(c.solvable_heights)},
                {"hypotheses", hyp},
                {"chain", c.chain},
                {"product_audit", Json{{"factors", audit}, {"height", half_json(c.audit_height)}}}};
}

MembershipCertificate membership_from(const Json& j, const std::string& where) {
    if (string_field(j, "type", where) != "membership") bad(where + "/type", "expected \"membership\"");
    MembershipCertificate c;
    c.knot = string_field(j, "knot", where);
    c.index = static_cast<int>(int_field(j, "index", where));
    c.grope_heights = pair_from(field(j, "grope_heights", where), where + "/grope_heights");
    c.whitney_heights = pair_from(field(j, "whitney_heights", where), where + "/whitney_heights");
    c.solvable_heights = pair_from(field(j, "solvable_heights", where), where + "/solvable_heights");
    const Json& hyp = field(j, "hypotheses", where);
    if (!hyp.is_object()) bad(where + "/hypotheses", "expected an object");
    for (auto it = hyp.begin(); it != hyp.end(); ++it) {
        if (!it.value().is_boolean()) bad(where + "/hypotheses/" + it.key(), "expected true or false");
        c.hypotheses[it.key()] = it.value().get<bool>();
    }
    const Json& chain = field(j, "chain", where);
    if (!chain.is_array()) bad(where + "/chain", "expected an array");
    for (const auto& s : chain) c.chain.push_back(s.get<std::string>());
    const Json& audit = field(j, "product_audit", where);
    for (const auto& f : field(audit, "factors", where + "/product_audit")) c.audit_factors.push_back(f.get<long long>());
    c.audit_height = half_from(field(audit, "height", where + "/product_audit"), where + "/product_audit/height");
    if (!(c.whitney_heights == c.grope_heights)) bad(where, "whitney heights must equal grope heights");
    return c;
}

Json certificate_json(const NonMembershipCertificate& c) {
    Json levels = Json::array();
    for (const auto& l : c.excluded_levels) levels.push_back(pair_json(l));
    return Json{{"type", "nonmembership"},
                {"m", c.m},
                {"n", c.n},
                {"coefficients", integers_json(c.coefficients)},
                {"leading_index", c.leading_index},
                {"mirrored", c.mirrored},
                {"prime", integer_json(c.prime)},
                {"own_sum", integer_json(c.own_sum)},
                {"signature_sum", integer_json(c.signature_sum)},
                {"later_sums", integers_json(c.later_sums)},
                {"threshold", rational_json(c.threshold)},
                {"margin", rational_json(c.margin)},
                {"excluded_levels", levels}};
}

NonMembershipCertificate nonmembership_from(const Json& j, const std::string& where) {
    if (string_field(j, "type", where) != "nonmembership") bad(where + "/type", "expected \"nonmembership\"");
    NonMembershipCertificate c;
    c.m = static_cast<int>(int_field(j, "m", where));
    c.n = static_cast<int>(int_field(j, "n", where));
    c.coefficients = integers_from(field(j, "coefficients", where), where + "/coefficients");
    c.leading_index = static_cast<int>(int_field(j, "leading_index", where));
    c.mirrored = bool_field(j, "mirrored", where);
    c.prime = integer_from(field(j, "prime", where), where + "/prime");
    c.own_sum = integer_from(field(j, "own_sum", where), where + "/own_sum");
    c.signature_sum = integer_from(field(j, "signature_sum", where), where + "/signature_sum");
    c.later_sums = integers_from(field(j, "later_sums", where), where + "/later_sums");
    c.threshold = rational_from(field(j, "threshold", where), where + "/threshold");
    c.margin = rational_from(field(j, "margin", where), where + "/margin");
    const Json& levels = field(j, "excluded_levels", where);
    if (!levels.is_array()) bad(where + "/excluded_levels", "expected an array");
    for (std::size_t i = 0; i < levels.size(); ++i)
        c.excluded_levels.push_back(pair_from(levels[i], where + "/excluded_levels/" + std::to_string(i)));
    if (c.margin != Rational(c.own_sum) - c.threshold) bad(where + "/margin", "inconsistent with own_sum - threshold");
    return c;
}

Json grope_json(const GropeTree& g) {
    Json j = surface_json(g.base);
    j["boundary"] = g.boundary_components;
    return j;
}

GropeTree grope_from(const Json& j, const std::string& where) {
    GropeTree g;
    g.boundary_components = static_cast<int>(int_field(j, "boundary", where));
    g.base = surface_from(j, where);
    try {
        validate_grope(g);
    } catch (const Error& e) {
        bad(where, e.what());
    }
    return g;
}

Json tower_json(const TowerTree& t) {
    Json pts = Json::array();
    for (const auto& p : t.points) pts.push_back(Json::array({p.a, p.b}));
    Json disks = Json::array();
    for (const auto& d : t.disks) {
        Json dj{{"pairs", Json::array({d.p, d.q})}};
        dj["height"] = d.height_label ? Json(*d.height_label) : Json(nullptr);
        disks.push_back(dj);
    }
    return Json{{"base_sheets", t.base_sheets}, {"points", pts}, {"disks", disks}};
}

Json schedule_json(const AbrsSchedule& s) {
    Json levels = Json::array();
    for (const auto& l : s) levels.push_back(Json{{"level", l.str()}, {"handles", level_handles(l)}});
    return Json{{"levels", levels}, {"handles", handle_count(s)}};
}

Json delta_json(const HandleDelta& d) {
    Json j = Json::object();
    for (const auto& [i, n] : d.counts) j[std::to_string(i)] = n;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::InvalidInput, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), ErrorCode::InvalidInput, "cannot write '" + path + "'");
    out << text;
}

Json parse_json(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidInput, origin + ": malformed JSON: " + e.what());
    }
}

Catalog load_catalog(const std::string& path) { return Catalog::from_json_text(read_file(path), path); }

void save_certificate(const Json& cert, const std::string& path) { write_file(path, canonical(cert)); }

}  // namespace dslice
