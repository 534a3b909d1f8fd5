#include "dslice/gropes.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "dslice/errors.hpp"

namespace dslice {

std::string HalfInt::str() const {
    if (unbounded) return "inf";
    std::string s = std::to_string(floor());
    return twice % 2 == 0 ? s : s + ".5";
}

bool HandleDelta::only_high_index() const {
    for (const auto& [i, n] : counts)
        if (i < 2 && n != 0) return false;
    return true;
}

std::string HandleDelta::str() const {
    std::string s = "{";
    for (const auto& [i, n] : counts) {
        if (s.size() > 1) s += ", ";
        s += std::to_string(i) + ": " + std::to_string(n);
    }
    return s + "}";
}

std::string path_str(const Path& p) {
    if (p.empty()) return "base";
    std::string s;
    for (const auto& st : p) s += "/" + std::to_string(st.pair) + (st.side == Side::L ? "L" : "R");
    return s;
}

namespace {

HalfInt branch_value(const Branch& b) { return b.is_cap() ? HalfInt::of(0) : surface_value(b.surface()); }

Surface* surface_ptr(Surface& base, const Path& p) {
    Surface* s = &base;
    for (const auto& st : p) {
        if (st.pair < 0 || st.pair >= s->genus()) return nullptr;
        Branch& b = s->pairs[st.pair].side(st.side);
        if (b.is_cap()) return nullptr;
        s = &b.surface();
    }
    return s;
}

Branch* branch_ptr(Surface& base, const Path& p) {
    if (p.empty()) return nullptr;
    Path parent(p.begin(), p.end() - 1);
    Surface* s = surface_ptr(base, parent);
    if (!s || p.back().pair < 0 || p.back().pair >= s->genus()) return nullptr;
    return &s->pairs[p.back().pair].side(p.back().side);
}

Path child(const Path& p, int pair, Side side) {
    Path c = p;
    c.push_back({pair, side});
    return c;
}

Path parent_of(const Path& p) { return Path(p.begin(), p.end() - 1); }

void for_each_cap(Surface& s, const Path& at, const std::function<void(Cap&, const Path&)>& f) {
    for (int i = 0; i < s.genus(); ++i)
        for (Side side : {Side::L, Side::R}) {
            Branch& b = s.pairs[i].side(side);
            Path p = child(at, i, side);
            if (b.is_cap())
                f(b.cap, p);
            else
                for_each_cap(b.surface(), p, f);
        }
}

void for_each_cap(const Surface& s, const Path& at, const std::function<void(const Cap&, const Path&)>& f) {
    for (int i = 0; i < s.genus(); ++i)
        for (Side side : {Side::L, Side::R}) {
            const Branch& b = s.pairs[i].side(side);
            Path p = child(at, i, side);
            if (b.is_cap())
                f(b.cap, p);
            else
                for_each_cap(b.surface(), p, f);
        }
}

/// Replaces every reference to `target` by two references to its parent stage.
long long push_refs_off(GropeTree& g, const Path& target) {
    long long pushed = 0;
    Path down = parent_of(target);
    for_each_cap(g.base, {}, [&](Cap& c, const Path&) {
        std::vector<SheetRef> out;
        for (auto& r : c.intersections) {
            if (!r.is_strand && r.path == target) {
                out.push_back(SheetRef::sheet(down));
                out.push_back(SheetRef::sheet(down));
                ++pushed;
            } else {
                out.push_back(r);
            }
        }
        c.intersections = std::move(out);
    });
    return pushed;
}

/// push_refs = false skips the reference scan; only valid when no cap meets a non-base sheet.
void contract_in_place(GropeTree& g, const Path& p, ContractMode mode, HandleDelta& delta, bool push_refs = true) {
    require(!p.empty(), ErrorCode::InvalidInput, "the base surface cannot be contracted");
    Branch* b = branch_ptr(g.base, p);
    require(b && !b->is_cap(), ErrorCode::InvalidInput, "no surface at " + path_str(p));
    Surface& s = b->surface();
    Cap merged;
    long long consumed = 0;
    for (const auto& pr : s.pairs) {
        require(pr.left.is_cap() && pr.right.is_cap(), ErrorCode::InvalidInput,
                "surface at " + path_str(p) + " is not a top stage");
        consumed += static_cast<long long>(pr.left.cap.intersections.size() + pr.right.cap.intersections.size());
        for (const auto& r : pr.left.cap.intersections) merged.intersections.insert(merged.intersections.end(), 2, r);
        if (mode == ContractMode::Symmetric)
            for (const auto& r : pr.right.cap.intersections)
                merged.intersections.insert(merged.intersections.end(), 2, r);
    }
    b->sub.clear();
    b->cap = std::move(merged);
    delta.add(2, consumed);
    if (push_refs) delta.add(2, push_refs_off(g, p));
}

void contract_fully(GropeTree& g, const Path& p, HandleDelta& delta, bool push_refs = true) {
    const Surface* s = surface_ptr(g.base, p);
    for (int i = 0; i < s->genus(); ++i)
        for (Side side : {Side::L, Side::R}) {
            if (!surface_ptr(g.base, p)->pairs[i].side(side).is_cap())
                contract_fully(g, child(p, i, side), delta, push_refs);
        }
    contract_in_place(g, p, ContractMode::Symmetric, delta, push_refs);
}

/// Keeps surfaces at depth <= limit below `p` (p itself at depth `depth`).
void truncate_below(GropeTree& g, const Path& p, int depth, long long limit, HandleDelta& delta, bool push_refs) {
    int genus = surface_ptr(g.base, p)->genus();
    for (int i = 0; i < genus; ++i)
        for (Side side : {Side::L, Side::R}) {
            if (surface_ptr(g.base, p)->pairs[i].side(side).is_cap()) continue;
            Path c = child(p, i, side);
            if (depth + 1 > limit)
                contract_fully(g, c, delta, push_refs);
            else
                truncate_below(g, c, depth + 1, limit, delta, push_refs);
        }
}

long long push_all_in_place(GropeTree& g) {
    long long pushed = 0;
    for (;;) {
        bool changed = false;
        for_each_cap(g.base, {}, [&](Cap& c, const Path&) {
            std::vector<SheetRef> out;
            for (auto& r : c.intersections) {
                if (!r.is_strand && !r.path.empty()) {
                    Path d = parent_of(r.path);
                    out.push_back(SheetRef::sheet(d));
                    out.push_back(SheetRef::sheet(d));
                    ++pushed;
                    changed = true;
                } else {
                    out.push_back(r);
                }
            }
            c.intersections = std::move(out);
        });
        if (!changed) return pushed;
    }
}

bool splittable(const Branch& b) {
    return b.is_cap() ? b.cap.intersections.size() > 1 : b.surface().genus() > 1;
}

std::vector<Branch> split_branch(const Branch& b) {
    std::vector<Branch> parts;
    if (b.is_cap()) {
        for (const auto& r : b.cap.intersections) {
            Branch c;
            c.cap.intersections = {r};
            parts.push_back(std::move(c));
        }
    } else {
        for (const auto& pr : b.surface().pairs) {
            Branch c;
            c.sub.push_back(Surface{{pr}});
            parts.push_back(std::move(c));
        }
    }
    return parts;
}

void normalize_surface(Surface& s, HandleDelta& delta) {
    for (auto& pr : s.pairs)
        for (Side side : {Side::L, Side::R})
            if (!pr.side(side).is_cap()) normalize_surface(pr.side(side).surface(), delta);
    std::deque<Pair> work(s.pairs.begin(), s.pairs.end());
    std::vector<Pair> out;
    while (!work.empty()) {
        Pair pr = std::move(work.front());
        work.pop_front();
        Side which;
        if (splittable(pr.left))
            which = Side::L;
        else if (splittable(pr.right))
            which = Side::R;
        else {
            out.push_back(std::move(pr));
            continue;
        }
        Side dual = which == Side::L ? Side::R : Side::L;
        std::vector<Branch> parts = split_branch(pr.side(which));
        delta.add(2, static_cast<long long>(parts.size() - 1) * total_intersections(pr.side(dual)));
        for (std::size_t k = parts.size(); k-- > 0;) {
            Pair np;
            np.side(which) = std::move(parts[k]);
            np.side(dual) = pr.side(dual);
            work.push_front(std::move(np));
        }
    }
    s.pairs = std::move(out);
}

void validate_surface(const GropeTree& g, const Surface& s, const Path& at) {
    if (!at.empty()) require(s.genus() >= 1, ErrorCode::InvalidInput, "empty subgrope at " + path_str(at));
    for (int i = 0; i < s.genus(); ++i)
        for (Side side : {Side::L, Side::R}) {
            const Branch& b = s.pairs[i].side(side);
            require(b.sub.size() <= 1, ErrorCode::InvalidInput, "malformed branch at " + path_str(child(at, i, side)));
            if (b.is_cap()) {
                for (const auto& r : b.cap.intersections) {
                    if (r.is_strand) continue;
                    Surface* t = surface_ptr(const_cast<Surface&>(g.base), r.path);
                    require(t != nullptr, ErrorCode::InvalidInput,
                            "cap at " + path_str(child(at, i, side)) + " meets missing sheet " + path_str(r.path));
                }
            } else {
                validate_surface(g, b.surface(), child(at, i, side));
            }
        }
}

Branch uniform_branch(long long height, int cap_hits, const std::string& strand) {
    Branch b;
    if (height <= 0) {
        for (int i = 0; i < cap_hits; ++i) b.cap.intersections.push_back(SheetRef::strand(strand));
    } else {
        b.sub.push_back(uniform_surface(height, cap_hits, strand));
    }
    return b;
}

Path shift_root(const Path& at, const Path& q, int pair_offset) {
    Path out = at;
    for (std::size_t i = 0; i < q.size(); ++i) {
        Step st = q[i];
        if (i == 0) st.pair += pair_offset;
        out.push_back(st);
    }
    return out;
}

void graft(Surface& s, const Path& at, const Surface& g1, bool& ok) {
    for (int i = 0; i < s.genus(); ++i)
        for (Side side : {Side::L, Side::R}) {
            Branch& b = s.pairs[i].side(side);
            Path p = child(at, i, side);
            if (!b.is_cap()) {
                graft(b.surface(), p, g1, ok);
                continue;
            }
            std::size_t c = b.cap.intersections.size();
            if (c == 0) {
                ok = false;
                return;
            }
            Surface merged;
            for (std::size_t k = 0; k < c; ++k) {
                int offset = static_cast<int>(k) * g1.genus();
                for (const auto& pr : g1.pairs) merged.pairs.push_back(pr);
                for (int j = 0; j < g1.genus(); ++j) {
                    Pair& np = merged.pairs[offset + j];
                    for (Side sd : {Side::L, Side::R}) {
                        Branch& nb = np.side(sd);
                        auto fix = [&](Cap& cap, const Path&) {
                            for (auto& r : cap.intersections)
                                if (!r.is_strand) r.path = shift_root(p, r.path, offset);
                        };
                        if (nb.is_cap())
                            fix(nb.cap, {});
                        else
                            for_each_cap(nb.surface(), {}, fix);
                    }
                }
            }
            b.cap.intersections.clear();
            b.sub.push_back(std::move(merged));
        }
}

/// Swaps the two sides of every base pair with swap[i] set, in one pass over the caps.
void swap_sides(GropeTree& g, const std::vector<bool>& swap) {
    bool any = false;
    for (std::size_t i = 0; i < swap.size(); ++i)
        if (swap[i]) {
            std::swap(g.base.pairs[i].left, g.base.pairs[i].right);
            any = true;
        }
    if (!any) return;
    for_each_cap(g.base, {}, [&](Cap& c, const Path&) {
        for (auto& r : c.intersections)
            if (!r.is_strand && !r.path.empty() && swap[r.path[0].pair])
                r.path[0].side = r.path[0].side == Side::L ? Side::R : Side::L;
    });
}

}  // namespace

void validate_grope(const GropeTree& g) {
    require(g.boundary_components >= 0 && g.boundary_components <= 2, ErrorCode::InvalidInput,
            "base boundary components must be 0, 1 or 2");
    validate_surface(g, g.base, {});
}

HalfInt pair_value(const Pair& p) {
    // children are caps or subgropes with at least one pair, so both values are finite
    long long fa = branch_value(p.left).floor(), fb = branch_value(p.right).floor();
    long long lo = std::min(fa, fb), hi = std::max(fa, fb);
    return hi > lo ? HalfInt::half_above(1 + lo) : HalfInt::of(1 + lo);
}

HalfInt surface_value(const Surface& s) {
    HalfInt v = HalfInt::infinite();
    for (const auto& p : s.pairs) v = std::min(v, pair_value(p));
    return v;
}

HalfInt grope_height(const GropeTree& g) { return surface_value(g.base); }

const Surface& surface_at(const GropeTree& g, const Path& p) {
    const Surface* s = surface_ptr(const_cast<Surface&>(g.base), p);
    require(s != nullptr, ErrorCode::InvalidInput, "no surface at " + path_str(p));
    return *s;
}

const Cap& cap_at(const GropeTree& g, const Path& p) {
    const Branch* b = branch_ptr(const_cast<Surface&>(g.base), p);
    require(b && b->is_cap(), ErrorCode::InvalidInput, "no cap at " + path_str(p));
    return b->cap;
}

long long total_intersections(const Branch& b) {
    if (b.is_cap()) return static_cast<long long>(b.cap.intersections.size());
    long long n = 0;
    for_each_cap(b.surface(), {}, [&](const Cap& c, const Path&) { n += static_cast<long long>(c.intersections.size()); });
    return n;
}

long long total_intersections(const GropeTree& g) {
    long long n = 0;
    for_each_cap(g.base, {}, [&](const Cap& c, const Path&) { n += static_cast<long long>(c.intersections.size()); });
    return n;
}

bool is_dyadic(const GropeTree& g) {
    std::function<bool(const Surface&, bool)> ok = [&](const Surface& s, bool base) {
        if (!base && s.genus() != 1) return false;
        for (const auto& pr : s.pairs)
            for (Side side : {Side::L, Side::R}) {
                const Branch& b = pr.side(side);
                if (b.is_cap() ? b.cap.intersections.size() > 1 : !ok(b.surface(), false)) return false;
            }
        return true;
    };
    return ok(g.base, true);
}

bool base_only_intersections(const GropeTree& g) {
    bool ok = true;
    for_each_cap(g.base, {}, [&](const Cap& c, const Path&) {
        for (const auto& r : c.intersections)
            if (!r.is_strand && !r.path.empty()) ok = false;
    });
    return ok;
}

GropeResult contract(const GropeTree& g, const Path& surface, ContractMode mode) {
    GropeResult out{g, {}};
    contract_in_place(out.tree, surface, mode, out.delta);
    return out;
}

GropeResult push_down(const GropeTree& g, const Path& cap, int index) {
    GropeResult out{g, {}};
    Branch* b = branch_ptr(out.tree.base, cap);
    require(b && b->is_cap(), ErrorCode::InvalidInput, "no cap at " + path_str(cap));
    auto& refs = b->cap.intersections;
    require(index >= 0 && index < static_cast<int>(refs.size()), ErrorCode::InvalidInput,
            "cap at " + path_str(cap) + " has no intersection " + std::to_string(index));
    SheetRef r = refs[index];
    require(!r.is_strand, ErrorCode::InvalidInput, "intersection with a strand cannot be pushed down");
    require(!r.path.empty(), ErrorCode::InvalidInput, "intersection is already on the base surface");
    Path d = parent_of(r.path);
    refs.erase(refs.begin() + index);
    refs.insert(refs.begin() + index, 2, SheetRef::sheet(d));
    out.delta.add(2, 1);
    return out;
}

GropeResult push_down_all(const GropeTree& g) {
    GropeResult out{g, {}};
    out.delta.add(2, push_all_in_place(out.tree));
    return out;
}

GropeResult split(const GropeTree& g) {
    GropeResult out = push_down_all(g);
    normalize_surface(out.tree.base, out.delta);
    return out;
}

GropeResult truncate(const GropeTree& g, const HalfInt& target) {
    HalfInt h = grope_height(g);
    require(!h.unbounded, ErrorCode::InvalidInput, "a grope without dual pairs has no finite height to lower");
    require(target.twice >= 2 && target <= h, ErrorCode::InvalidInput,
            "target height " + target.str() + " is not in [1, " + h.str() + "]");
    GropeResult out{g, {}};
    bool push = !base_only_intersections(g);
    long long n = target.floor();
    if (target.is_integer()) {
        truncate_below(out.tree, {}, 0, n - 1, out.delta, push);
    } else {
        int genus = out.tree.base.genus();
        // the taller side goes left
        std::vector<bool> swap(genus);
        for (int i = 0; i < genus; ++i) {
            const Pair& pr = out.tree.base.pairs[i];
            swap[i] = branch_value(pr.right).floor() > branch_value(pr.left).floor();
        }
        swap_sides(out.tree, swap);
        for (int i = 0; i < genus; ++i) {
            if (!out.tree.base.pairs[i].left.is_cap())
                truncate_below(out.tree, {{i, Side::L}}, 1, n, out.delta, push);
            if (!out.tree.base.pairs[i].right.is_cap()) {
                if (n - 1 == 0)
                    contract_fully(out.tree, {{i, Side::R}}, out.delta, push);
                else
                    truncate_below(out.tree, {{i, Side::R}}, 1, n - 1, out.delta, push);
            }
        }
    }
    HalfInt got = grope_height(out.tree);
    require(got == target, ErrorCode::Internal,
            "truncation produced height " + got.str() + " instead of " + target.str());
    return out;
}

GropeResult lower_height(const GropeTree& g, const HalfInt& target) {
    HalfInt h = grope_height(g);
    require(target < h, ErrorCode::InvalidInput,
            "target height " + target.str() + " is not below the current height " + h.str());
    return truncate(g, target);
}

GropeTree product(const GropeTree& g1, const GropeTree& g2) {
    require(g1.boundary_components == 1, ErrorCode::InvalidInput, "mismatched kinds: the first factor must be disk-like");
    HalfInt h1 = grope_height(g1);
    require(h1.is_integer() && g1.base.genus() > 0, ErrorCode::InvalidInput,
            "mismatched kinds: the first factor needs a finite integer height");
    if (g2.base.genus() == 0) {
        // trivial concordance: the product is G1 spread along the product region
        GropeTree out = g1;
        out.boundary_components = g2.boundary_components;
        return out;
    }
    GropeTree out = g2;
    bool ok = true;
    graft(out.base, {}, g1.base, ok);
    require(ok, ErrorCode::InvalidInput, "every cap of the second factor must carry a recorded intersection");
    return out;
}

Surface uniform_surface(long long height, int cap_hits, const std::string& strand) {
    require(height >= 1, ErrorCode::InvalidInput, "uniform surface height must be at least 1");
    Pair p;
    p.left = uniform_branch(height - 1, cap_hits, strand);
    p.right = uniform_branch(height - 1, cap_hits, strand);
    return Surface{{p}};
}

GropeTree model_grope(int boundary, int genus, const HalfInt& height, int cap_hits, const std::string& strand) {
    require(!height.unbounded && height.twice >= 2, ErrorCode::InvalidInput, "model height must be at least 1");
    GropeTree g;
    g.boundary_components = boundary;
    long long n = height.floor();
    for (int i = 0; i < genus; ++i) {
        Pair p;
        if (height.is_integer()) {
            p.left = uniform_branch(n - 1, cap_hits, strand);
            p.right = uniform_branch(n - 1, cap_hits, strand);
        } else {
            p.left = uniform_branch(n, cap_hits, strand);
            p.right = uniform_branch(n - 1, cap_hits, strand);
        }
        g.base.pairs.push_back(std::move(p));
    }
    return g;
}

}  // namespace dslice
