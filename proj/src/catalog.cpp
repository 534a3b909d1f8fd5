#include "dslice/catalog.hpp"

#include <nlohmann/json.hpp>

#include "dslice/errors.hpp"

namespace dslice {

namespace {

const char* kBuiltin = R"({
  "version": 1,
  "knots": [
    {"name": "unknot", "seifert": [], "crossings": 0, "arf": 0},
    {"name": "trefoil", "seifert": [[-1, 1], [0, -1]], "crossings": 3, "arf": 1},
    {"name": "figure-8", "seifert": [[1, 1], [0, -1]], "crossings": 4, "arf": 1},
    {"name": "6_1", "seifert": [[1, 1], [0, -2]], "crossings": 6, "arf": 0},
    {"name": "9_46", "seifert": [[0, 2], [1, 0]], "crossings": 9, "arf": 0}
  ]
})";

}  // namespace

const Catalog& Catalog::builtin() {
    static const Catalog c = from_json_text(kBuiltin, "builtin catalog");
    return c;
}

Catalog Catalog::from_json_text(const std::string& text, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidInput, origin + ": malformed JSON: " + e.what());
    }
    auto bad = [&](const std::string& ptr, const std::string& why) {
        fail(ErrorCode::InvalidInput, origin + ": " + ptr + ": " + why);
    };
    if (!doc.is_object()) bad("", "expected an object");
    if (!doc.contains("version") || doc["version"] != 1) bad("/version", "expected 1");
    if (!doc.contains("knots") || !doc["knots"].is_array()) bad("/knots", "expected an array");
    Catalog cat;
    const auto& knots = doc["knots"];
    for (std::size_t i = 0; i < knots.size(); ++i) {
        std::string ptr = "/knots/" + std::to_string(i);
        const auto& k = knots[i];
        if (!k.is_object()) bad(ptr, "expected an object");
        if (!k.contains("name") || !k["name"].is_string()) bad(ptr + "/name", "expected a string");
        if (!k.contains("seifert") || !k["seifert"].is_array()) bad(ptr + "/seifert", "expected an array of rows");
        if (!k.contains("crossings") || !k["crossings"].is_number_integer() || k["crossings"].get<long long>() < 0)
            bad(ptr + "/crossings", "expected a non-negative integer");
        const auto& rows = k["seifert"];
        int n = static_cast<int>(rows.size());
        IntMatrix v(n, n);
        for (int r = 0; r < n; ++r) {
            if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n)
                bad(ptr + "/seifert/" + std::to_string(r), "expected a row of length " + std::to_string(n));
            for (int c = 0; c < n; ++c) {
                if (!rows[r][c].is_number_integer())
                    bad(ptr + "/seifert/" + std::to_string(r) + "/" + std::to_string(c), "expected an integer");
                v(r, c) = rows[r][c].get<long long>();
            }
        }
        CatalogKnot ck;
        ck.name = k["name"].get<std::string>();
        try {
            ck.seifert = SeifertMatrix(v);
        } catch (const Error& e) {
            bad(ptr + "/seifert", e.what());
        }
        ck.crossing_number = k["crossings"].get<long long>();
        if (ck.seifert.size() > 0 && ck.crossing_number < 3)
            bad(ptr + "/crossings", "a nontrivial knot has at least 3 crossings");
        if (k.contains("arf") && !k["arf"].is_null()) {
            if (!k["arf"].is_number_integer() || (k["arf"] != 0 && k["arf"] != 1)) bad(ptr + "/arf", "expected 0, 1 or null");
            ck.arf_flag = k["arf"].get<int>();
            if (*ck.arf_flag != arf(ck.seifert)) bad(ptr + "/arf", "inconsistent with Delta(-1) mod 8");
        }
        if (cat.contains(ck.name)) bad(ptr + "/name", "duplicate name '" + ck.name + "'");
        cat.add(std::move(ck));
    }
    return cat;
}

void Catalog::merge(const Catalog& other) {
    for (const auto& [name, k] : other.knots_) {
        require(!contains(name), ErrorCode::InvalidInput, "catalog conflict: '" + name + "' is already defined");
        add(k);
    }
}

const CatalogKnot& Catalog::get(const std::string& name) const {
    auto it = knots_.find(name);
    require(it != knots_.end(), ErrorCode::InvalidInput, "unknown knot '" + name + "'");
    return it->second;
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    for (const auto& [n, k] : knots_) out.push_back(n);
    return out;
}

void Catalog::add(CatalogKnot k) {
    std::string name = k.name;
    knots_[name] = std::move(k);
}

}  // namespace dslice
