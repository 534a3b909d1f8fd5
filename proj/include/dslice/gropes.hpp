#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace dslice {

/// Height in (1/2)Z, stored doubled; `unbounded` marks gropes with no pairs and
/// towers without intersections.
struct HalfInt {
    long long twice = 0;
    bool unbounded = false;

    static HalfInt of(long long n) { return {2 * n, false}; }
    /// n.5
    static HalfInt half_above(long long n) { return {2 * n + 1, false}; }
    static HalfInt infinite() { return {0, true}; }
    static HalfInt from_twice(long long t) { return {t, false}; }

    bool is_integer() const { return !unbounded && twice % 2 == 0; }
    long long floor() const { return twice >= 0 ? twice / 2 : -((-twice + 1) / 2); }

    bool operator==(const HalfInt& o) const { return unbounded == o.unbounded && (unbounded || twice == o.twice); }
    bool operator<(const HalfInt& o) const {
        if (unbounded) return false;
        if (o.unbounded) return true;
        return twice < o.twice;
    }
    bool operator<=(const HalfInt& o) const { return !(o < *this); }
    HalfInt operator+(const HalfInt& o) const {
        if (unbounded || o.unbounded) return infinite();
        return {twice + o.twice, false};
    }
    std::string str() const;
};

/// Handles of each index added to the exterior by an operation.
struct HandleDelta {
    std::map<int, long long> counts;

    void add(int index, long long n) {
        if (n != 0) counts[index] += n;
    }
    HandleDelta& operator+=(const HandleDelta& o) {
        for (const auto& [i, n] : o.counts) add(i, n);
        return *this;
    }
    long long at(int index) const {
        auto it = counts.find(index);
        return it == counts.end() ? 0 : it->second;
    }
    /// Whether every added handle has index >= 2.
    bool only_high_index() const;
    std::string str() const;
};

enum class Side { L, R };

struct Step {
    int pair;
    Side side;
    auto operator<=>(const Step&) const = default;
};

/// Sequence of (pair, side) steps from the base; the empty path is the base surface.
using Path = std::vector<Step>;

/// What a cap intersects: a body surface (by path) or a named strand outside the grope.
struct SheetRef {
    bool is_strand = false;
    Path path;
    std::string name;

    static SheetRef sheet(Path p) { return {false, std::move(p), {}}; }
    static SheetRef strand(std::string n) { return {true, {}, std::move(n)}; }
    auto operator<=>(const SheetRef&) const = default;
};

struct Cap {
    std::vector<SheetRef> intersections;
};

struct Surface;

struct Branch {
    Cap cap;
    std::vector<Surface> sub;  // empty for a cap, one entry for a subgrope

    bool is_cap() const { return sub.empty(); }
    const Surface& surface() const { return sub.front(); }
    Surface& surface() { return sub.front(); }
};

struct Pair {
    Branch left, right;
    const Branch& side(Side s) const { return s == Side::L ? left : right; }
    Branch& side(Side s) { return s == Side::L ? left : right; }
};

struct Surface {
    std::vector<Pair> pairs;
    int genus() const { return static_cast<int>(pairs.size()); }
};

struct GropeTree {
    int boundary_components = 1;  // 0 sphere-like, 1 disk-like, 2 annulus-like
    Surface base;
};

/// Throws InvalidInput on dangling references, empty subgropes or a bad boundary count.
void validate_grope(const GropeTree& g);

HalfInt surface_value(const Surface& s);
HalfInt pair_value(const Pair& p);
HalfInt grope_height(const GropeTree& g);

const Surface& surface_at(const GropeTree& g, const Path& p);
/// The cap addressed by a path whose last step names a cap branch.
const Cap& cap_at(const GropeTree& g, const Path& p);

long long total_intersections(const GropeTree& g);
long long total_intersections(const Branch& b);
/// Whether every non-base surface has genus 1 and every cap meets at most one sheet.
bool is_dyadic(const GropeTree& g);
/// Whether every cap intersection is with the base or a strand.
bool base_only_intersections(const GropeTree& g);

struct GropeResult {
    GropeTree tree;
    HandleDelta delta;
};

enum class ContractMode { Symmetric, Asymmetric };

/// Replaces the top-stage surface at `surface` by a single cap.
GropeResult contract(const GropeTree& g, const Path& surface, ContractMode mode);
/// Moves intersection `index` of the cap at `cap` one stage down.
GropeResult push_down(const GropeTree& g, const Path& cap, int index);
GropeResult push_down_all(const GropeTree& g);
/// Dyadic normal form; pushes intersections to the base first.
GropeResult split(const GropeTree& g);
GropeResult lower_height(const GropeTree& g, const HalfInt& target);
/// Truncation to exactly `target` (which may equal the current height).
GropeResult truncate(const GropeTree& g, const HalfInt& target);

/// G1 . G2: every cap of G2 meeting c sheets becomes a boundary sum of c copies of G1.
GropeTree product(const GropeTree& g1, const GropeTree& g2);

/// Genus-1 uniform tree of the given height; caps carry `cap_hits` strand intersections.
Surface uniform_surface(long long height, int cap_hits, const std::string& strand);
/// Model grope with `genus` base pairs, each realizing `height` exactly.
GropeTree model_grope(int boundary, int genus, const HalfInt& height, int cap_hits = 0,
                      const std::string& strand = "K");

std::string path_str(const Path& p);

}  // namespace dslice
