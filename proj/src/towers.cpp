#include "dslice/towers.hpp"

#include <algorithm>
#include <set>

#include "dslice/errors.hpp"

namespace dslice {

void validate_tower(const TowerTree& t) {
    require(t.base_sheets >= 1, ErrorCode::InvalidInput, "a tower needs at least one base sheet");
    int sheets = t.sheet_count();
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        const auto& p = t.points[i];
        require(p.a >= 0 && p.a < sheets && p.b >= 0 && p.b < sheets, ErrorCode::InvalidInput,
                "point " + std::to_string(i) + " lies on a missing sheet");
    }
    std::vector<int> used(t.points.size(), 0);
    for (std::size_t d = 0; d < t.disks.size(); ++d) {
        const auto& w = t.disks[d];
        int n = static_cast<int>(t.points.size());
        require(w.p >= 0 && w.p < n && w.q >= 0 && w.q < n && w.p != w.q, ErrorCode::InvalidInput,
                "disk " + std::to_string(d) + " must pair two distinct points");
        require(++used[w.p] == 1 && ++used[w.q] == 1, ErrorCode::InvalidInput,
                "a point is paired by more than one Whitney disk");
    }
}

TowerHeights tower_heights(const TowerTree& t) {
    validate_tower(t);
    TowerHeights h;
    h.sheet.assign(t.sheet_count(), std::nullopt);
    h.point.assign(t.points.size(), std::nullopt);
    h.paired_by.assign(t.points.size(), -1);
    for (int i = 0; i < t.base_sheets; ++i) h.sheet[i] = 1;
    for (std::size_t d = 0; d < t.disks.size(); ++d) {
        h.paired_by[t.disks[d].p] = static_cast<int>(d);
        h.paired_by[t.disks[d].q] = static_cast<int>(d);
    }
    auto point_height = [&](std::size_t i) -> std::optional<int> {
        const auto& a = h.sheet[t.points[i].a];
        const auto& b = h.sheet[t.points[i].b];
        if (a && b && *a == *b) return a;
        return std::nullopt;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < t.points.size(); ++i) {
            auto v = point_height(i);
            if (v != h.point[i]) {
                h.point[i] = v;
                changed = true;
            }
        }
        for (std::size_t d = 0; d < t.disks.size(); ++d) {
            int s = t.base_sheets + static_cast<int>(d);
            if (h.sheet[s]) continue;
            const auto& hp = h.point[t.disks[d].p];
            const auto& hq = h.point[t.disks[d].q];
            if (hp && hq && *hp == *hq) {
                h.sheet[s] = *hp + 1;
                changed = true;
            }
        }
    }
    for (std::size_t d = 0; d < t.disks.size(); ++d) {
        const auto& lbl = t.disks[d].height_label;
        const auto& got = h.sheet[t.base_sheets + d];
        if (lbl && got)
            require(*lbl == *got, ErrorCode::InvalidInput,
                    "disk " + std::to_string(d) + " is labelled " + std::to_string(*lbl) + " but has height " +
                        std::to_string(*got));
    }
    return h;
}

namespace {

bool has_height(const TowerTree& t, const TowerHeights& h, const HalfInt& target) {
    long long n = target.floor();
    long long top = target.is_integer() ? n : n + 1;
    for (const auto& s : h.sheet)
        if (!s || *s > top) return false;
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        int ha = *h.sheet[t.points[i].a], hb = *h.sheet[t.points[i].b];
        bool paired = h.paired_by[i] >= 0;
        if (target.is_integer()) {
            if (!h.point[i] || *h.point[i] > n) return false;
            if (*h.point[i] < n && !paired) return false;
        } else {
            if (ha <= n && hb <= n && (!h.point[i] || !paired)) return false;
            if ((ha == n + 1 && hb < n) || (hb == n + 1 && ha < n)) return false;
        }
    }
    return true;
}

}  // namespace

bool tower_has_height(const TowerTree& t, const HalfInt& h) {
    require(!h.unbounded && h.twice >= 2, ErrorCode::InvalidInput, "tower heights start at 1");
    return has_height(t, tower_heights(t), h);
}

HalfInt tower_height(const TowerTree& t) {
    TowerHeights h = tower_heights(t);
    if (t.points.empty()) return HalfInt::infinite();
    int top = 1;
    for (const auto& s : h.sheet) {
        require(s.has_value(), ErrorCode::UndefinedHeight, "a Whitney disk pairs points of different heights");
        top = std::max(top, *s);
    }
    for (long long tw = 2LL * top; tw >= 2; --tw)
        if (has_height(t, h, HalfInt::from_twice(tw))) return HalfInt::from_twice(tw);
    fail(ErrorCode::UndefinedHeight, "the tower satisfies no height clause");
}

TowerResult remove_disk(const TowerTree& t, int disk) {
    validate_tower(t);
    require(disk >= 0 && disk < static_cast<int>(t.disks.size()), ErrorCode::InvalidInput, "no such Whitney disk");
    std::set<int> gone{disk};
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t d = 0; d < t.disks.size(); ++d) {
            if (gone.count(static_cast<int>(d))) continue;
            for (int pi : {t.disks[d].p, t.disks[d].q}) {
                const auto& p = t.points[pi];
                if (gone.count(p.a - t.base_sheets) || gone.count(p.b - t.base_sheets)) {
                    gone.insert(static_cast<int>(d));
                    changed = true;
                    break;
                }
            }
        }
    }
    auto sheet_gone = [&](int s) { return s >= t.base_sheets && gone.count(s - t.base_sheets); };
    std::vector<int> sheet_map(t.sheet_count(), -1), point_map(t.points.size(), -1);
    int next = 0;
    for (int s = 0; s < t.sheet_count(); ++s)
        if (!sheet_gone(s)) sheet_map[s] = next++;
    TowerResult out;
    out.tree.base_sheets = t.base_sheets;
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        const auto& p = t.points[i];
        if (sheet_gone(p.a) || sheet_gone(p.b)) continue;
        point_map[i] = static_cast<int>(out.tree.points.size());
        out.tree.points.push_back({sheet_map[p.a], sheet_map[p.b]});
    }
    for (std::size_t d = 0; d < t.disks.size(); ++d) {
        if (gone.count(static_cast<int>(d))) continue;
        out.tree.disks.push_back({point_map[t.disks[d].p], point_map[t.disks[d].q], t.disks[d].height_label});
    }
    out.delta.add(2, static_cast<long long>(gone.size()));
    return out;
}

TowerResult finger_move(const TowerTree& t, int sheet_a, int sheet_b) {
    validate_tower(t);
    require(sheet_a >= 0 && sheet_a < t.sheet_count() && sheet_b >= 0 && sheet_b < t.sheet_count(),
            ErrorCode::InvalidInput, "finger move between missing sheets");
    TowerResult out{t, {}};
    int p = static_cast<int>(out.tree.points.size());
    out.tree.points.push_back({sheet_a, sheet_b});
    out.tree.points.push_back({sheet_a, sheet_b});
    out.tree.disks.push_back({p, p + 1, std::nullopt});
    out.delta.add(3, 1);
    return out;
}

TowerResult lower_height(const TowerTree& t, const HalfInt& target) {
    HalfInt h = tower_height(t);
    require(target.twice >= 2 && target < h, ErrorCode::InvalidInput,
            "target height " + target.str() + " is not below the current height " + h.str());
    long long n = target.floor();
    long long keep = target.is_integer() ? n : n + 1;
    TowerResult out{t, {}};
    for (;;) {
        TowerHeights hs = tower_heights(out.tree);
        int victim = -1;
        for (std::size_t d = 0; d < out.tree.disks.size() && victim < 0; ++d) {
            const auto& s = hs.sheet[out.tree.base_sheets + d];
            if (!s || *s > keep) victim = static_cast<int>(d);
        }
        if (victim < 0) break;
        TowerResult r = remove_disk(out.tree, victim);
        out.tree = std::move(r.tree);
        out.delta += r.delta;
    }
    if (!target.is_integer() && !(tower_height(out.tree) == target)) {
        TowerHeights hs = tower_heights(out.tree);
        int top = -1, low = -1;
        for (int s = 0; s < out.tree.sheet_count(); ++s) {
            if (top < 0 && hs.sheet[s] == n + 1) top = s;
            if (low < 0 && hs.sheet[s] == n) low = s;
        }
        require(top >= 0 && low >= 0, ErrorCode::Internal, "no disk available for the half-step finger move");
        TowerResult f = finger_move(out.tree, top, low);
        out.delta += f.delta;
        TowerResult r = remove_disk(f.tree, static_cast<int>(f.tree.disks.size()) - 1);
        out.tree = std::move(r.tree);
        out.delta += r.delta;
    }
    HalfInt got = tower_height(out.tree);
    require(got == target, ErrorCode::Internal, "lowering produced height " + got.str() + " instead of " + target.str());
    return out;
}

namespace {

void chunk(TowerTree& t, int sheet, long long k, const HalfInt& target) {
    int p = static_cast<int>(t.points.size());
    t.points.push_back({sheet, sheet});
    t.points.push_back({sheet, sheet});
    if (target == HalfInt::of(k)) return;
    int d = t.sheet_count();
    t.disks.push_back({p, p + 1, static_cast<int>(k + 1)});
    if (target == HalfInt::half_above(k)) {
        t.points.push_back({sheet, d});
        t.points.push_back({sheet, d});
        return;
    }
    chunk(t, d, k + 1, target);
}

}  // namespace

TowerTree model_tower(int pairs, const HalfInt& height) {
    require(!height.unbounded && height.twice >= 2, ErrorCode::InvalidInput, "model height must be at least 1");
    require(pairs >= 1, ErrorCode::InvalidInput, "a model tower needs at least one pair of points");
    TowerTree t;
    for (int i = 0; i < pairs; ++i) chunk(t, 0, 1, height);
    return t;
}

GropeToTower schneiderman(const GropeTree& g) {
    validate_grope(g);
    GropeToTower out;
    GropeResult s = split(g);
    out.delta += s.delta;
    HalfInt h = grope_height(s.tree);
    if (h.unbounded) return out;
    GropeResult tr = truncate(s.tree, h);
    out.delta += tr.delta;
    int pairs = tr.tree.base.genus();
    out.tower = model_tower(pairs, h);
    if (!h.is_integer()) {
        // each half step: finger move, then removal of its Whitney disk
        out.delta.add(3, pairs);
        out.delta.add(2, pairs);
    }
    HalfInt got = tower_height(out.tower);
    require(got == h, ErrorCode::Internal, "transformation changed height " + h.str() + " to " + got.str());
    return out;
}

TowerToGrope schneiderman(const TowerTree& t) {
    HalfInt h = tower_height(t);
    TowerToGrope out;
    out.grope.boundary_components = 0;
    if (h.unbounded) return out;
    TowerHeights hs = tower_heights(t);
    int base_points = 0;
    for (std::size_t i = 0; i < t.points.size(); ++i)
        if (hs.point[i] == 1) ++base_points;
    int pairs = std::max(1, (base_points + 1) / 2);
    out.grope = model_grope(0, pairs, h);
    HalfInt got = grope_height(out.grope);
    require(got == h, ErrorCode::Internal, "transformation changed height " + h.str() + " to " + got.str());
    return out;
}

}  // namespace dslice
