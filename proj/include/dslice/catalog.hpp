#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dslice/knot_core.hpp"

namespace dslice {

struct CatalogKnot {
    std::string name;
    SeifertMatrix seifert;
    long long crossing_number = 0;
    std::optional<int> arf_flag;
};

class Catalog {
public:
    /// The shipped catalog: unknot, trefoil, figure-8, 6_1, 9_46.
    static const Catalog& builtin();

    /// Parses the catalog JSON format; errors carry a JSON pointer to the offending entry.
    static Catalog from_json_text(const std::string& text, const std::string& origin);

    /// Adds every entry of other; a name present in both is an error.
    void merge(const Catalog& other);

    const CatalogKnot& get(const std::string& name) const;
    bool contains(const std::string& name) const { return knots_.count(name) > 0; }
    std::vector<std::string> names() const;
    const std::map<std::string, CatalogKnot>& knots() const { return knots_; }

    void add(CatalogKnot k);

private:
    std::map<std::string, CatalogKnot> knots_;
};

}  // namespace dslice
