#pragma once

#include <optional>
#include <vector>

#include "dslice/gropes.hpp"

namespace dslice {

/// Sheets 0..base_sheets-1 are base surfaces; sheet base_sheets + i is disks[i].
/// An intersection point lies on sheets a and b (a == b for a self-intersection).
struct TowerPoint {
    int a, b;
};

/// A Whitney disk pairing points p and q.
struct WhitneyDisk {
    int p, q;
    std::optional<int> height_label;
};

struct TowerTree {
    int base_sheets = 1;
    std::vector<WhitneyDisk> disks;
    std::vector<TowerPoint> points;

    int sheet_count() const { return base_sheets + static_cast<int>(disks.size()); }
};

struct TowerHeights {
    std::vector<std::optional<int>> sheet;  // per sheet
    std::vector<std::optional<int>> point;  // per point
    std::vector<int> paired_by;             // disk index or -1
};

/// Throws InvalidInput on bad indices or a point paired twice.
void validate_tower(const TowerTree& t);
TowerHeights tower_heights(const TowerTree& t);

/// Whether t satisfies the height-h clauses.
bool tower_has_height(const TowerTree& t, const HalfInt& h);
/// Largest h up to the tallest sheet for which the clauses hold; unbounded for
/// an embedded tower. Throws UndefinedHeight when no h >= 1 qualifies.
HalfInt tower_height(const TowerTree& t);

struct TowerResult {
    TowerTree tree;
    HandleDelta delta;
};

/// Deletes a Whitney disk together with every point on it.
TowerResult remove_disk(const TowerTree& t, int disk);
/// Finger move between two sheets: two new points and the Whitney disk pairing them.
TowerResult finger_move(const TowerTree& t, int sheet_a, int sheet_b);
TowerResult lower_height(const TowerTree& t, const HalfInt& target);

/// Immersed sphere with `pairs` pairs of self-intersections, each supporting a
/// chain of Whitney disks realizing `height` exactly.
TowerTree model_tower(int pairs, const HalfInt& height);

struct GropeToTower {
    TowerTree tower;
    HandleDelta delta;
};
struct TowerToGrope {
    GropeTree grope;
    HandleDelta delta;
};

/// Height-preserving transformation between capped gropes and Whitney towers.
GropeToTower schneiderman(const GropeTree& g);
TowerToGrope schneiderman(const TowerTree& t);

}  // namespace dslice
