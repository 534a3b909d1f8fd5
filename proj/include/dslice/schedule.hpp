#pragma once

#include <string>
#include <vector>

#include "dslice/gropes.hpp"

namespace dslice {

struct Level {
    enum class Type { A, B, R, S };
    Type type;
    int param = 0;  // genus for A, outgoing circles for R

    bool operator==(const Level& o) const { return type == o.type && param == o.param; }
    std::string str() const;  // "A{2}", "B", "R{3}", "S"
};

using AbrsSchedule = std::vector<Level>;

enum class Construction { PushedSatellite, PushedConcordance };

struct ProductFactor {
    GropeTree grope;
    Construction kind;
};

/// Schedule of a pushed 3D grope: one A{g} per body surface in (depth, path)
/// order, then per cap meeting the strands m >= 1 times an R{m} followed by m B
/// levels; a concordance opens with its S level.
AbrsSchedule schedule_of(const GropeTree& g, Construction kind);

/// Schedule of F_1 . F_2 . ... . F_k: the B levels of the outermost factor F_k
/// are replaced by the schedule of F_1 . ... . F_{k-1}.
AbrsSchedule schedule_of(const std::vector<ProductFactor>& factors);

int level_handles(const Level& l);
long long handle_count(const AbrsSchedule& s);

/// Euler characteristic of the level's 2-complex, computed from a polygon model.
long long level_euler_characteristic(const Level& l);

std::string schedule_csv(const AbrsSchedule& s);

}  // namespace dslice
