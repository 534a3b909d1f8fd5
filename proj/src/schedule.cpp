#include "dslice/schedule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dslice/errors.hpp"

namespace dslice {

std::string Level::str() const {
    switch (type) {
        case Type::A:
            return "A{" + std::to_string(param) + "}";
        case Type::B:
            return "B";
        case Type::R:
            return "R{" + std::to_string(param) + "}";
        case Type::S:
            return "S";
    }
    return "?";
}

namespace {

struct CapSite {
    Path path;
    int hits;
};

void collect(const Surface& s, const Path& at, std::vector<std::pair<Path, int>>& bodies, std::vector<CapSite>& caps) {
    bodies.push_back({at, s.genus()});
    for (int i = 0; i < s.genus(); ++i)
        for (Side side : {Side::L, Side::R}) {
            const Branch& b = s.pairs[i].side(side);
            Path p = at;
            p.push_back({i, side});
            if (b.is_cap()) {
                int hits = 0;
                for (const auto& r : b.cap.intersections) {
                    require(r.is_strand, ErrorCode::InvalidInput,
                            "kind mismatch: caps of a pushed 3D grope may only meet the strands");
                    ++hits;
                }
                caps.push_back({p, hits});
            } else {
                collect(b.surface(), p, bodies, caps);
            }
        }
}

bool by_depth_then_path(const Path& a, const Path& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

AbrsSchedule schedule_of(const GropeTree& g, Construction kind) {
    validate_grope(g);
    if (kind == Construction::PushedSatellite)
        require(g.boundary_components == 1, ErrorCode::InvalidInput,
                "kind mismatch: a satellite grope must be disk-like");
    AbrsSchedule out;
    if (g.base.genus() == 0) return out;
    if (kind == Construction::PushedConcordance) out.push_back({Level::Type::S, 0});
    std::vector<std::pair<Path, int>> bodies;
    std::vector<CapSite> caps;
    collect(g.base, {}, bodies, caps);
    std::sort(bodies.begin(), bodies.end(),
              [](const auto& a, const auto& b) { return by_depth_then_path(a.first, b.first); });
    std::sort(caps.begin(), caps.end(), [](const auto& a, const auto& b) { return by_depth_then_path(a.path, b.path); });
    for (const auto& [p, genus] : bodies) out.push_back({Level::Type::A, genus});
    for (const auto& c : caps) {
        if (c.hits == 0) continue;
        out.push_back({Level::Type::R, c.hits});
        for (int i = 0; i < c.hits; ++i) out.push_back({Level::Type::B, 0});
    }
    return out;
}

AbrsSchedule schedule_of(const std::vector<ProductFactor>& factors) {
    require(!factors.empty(), ErrorCode::InvalidInput, "a product needs at least one factor");
    AbrsSchedule inner = schedule_of(factors.front().grope, factors.front().kind);
    for (std::size_t k = 1; k < factors.size(); ++k) {
        require(factors[k - 1].grope.boundary_components == 1, ErrorCode::InvalidInput,
                "kind mismatch: inner product factors must be disk-like");
        AbrsSchedule outer = schedule_of(factors[k].grope, factors[k].kind);
        AbrsSchedule merged;
        for (const auto& l : outer) {
            if (l.type == Level::Type::B)
                merged.insert(merged.end(), inner.begin(), inner.end());
            else
                merged.push_back(l);
        }
        inner = std::move(merged);
    }
    return inner;
}

int level_handles(const Level& l) {
    switch (l.type) {
        case Level::Type::A:
            return 2 * l.param - 1;
        case Level::Type::B:
            return 0;
        case Level::Type::R:
            return l.param - 1;
        case Level::Type::S:
            return 1;
    }
    return 0;
}

long long handle_count(const AbrsSchedule& s) {
    long long n = 0;
    for (const auto& l : s) n += level_handles(l);
    return n;
}

namespace {

// One face given as a cyclic word of oriented edge labels.
struct EdgeUse {
    int label;
    bool forward;
};

int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

long long euler_of(const std::vector<std::vector<EdgeUse>>& faces) {
    std::set<int> labels;
    for (const auto& f : faces)
        for (const auto& e : f) labels.insert(e.label);
    int max_label = labels.empty() ? 0 : *labels.rbegin() + 1;
    // endpoint 2*label is the tail, 2*label+1 the head
    std::vector<int> parent(2 * max_label);
    std::iota(parent.begin(), parent.end(), 0);
    auto start = [](const EdgeUse& e) { return 2 * e.label + (e.forward ? 0 : 1); };
    auto end = [](const EdgeUse& e) { return 2 * e.label + (e.forward ? 1 : 0); };
    for (const auto& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            const EdgeUse& prev = f[(i + f.size() - 1) % f.size()];
            parent[find(parent, end(prev))] = find(parent, start(f[i]));
        }
    std::set<int> vertices;
    for (int l : labels) {
        vertices.insert(find(parent, 2 * l));
        vertices.insert(find(parent, 2 * l + 1));
    }
    return static_cast<long long>(vertices.size()) - static_cast<long long>(labels.size()) +
           static_cast<long long>(faces.size());
}

std::vector<EdgeUse> holed_disk(int holes) {
    std::vector<EdgeUse> w{{0, true}};
    for (int j = 0; j < holes; ++j) {
        int c = 1 + 2 * j, h = 2 + 2 * j;
        w.push_back({c, true});
        w.push_back({h, true});
        w.push_back({c, false});
    }
    return w;
}

}  // namespace

long long level_euler_characteristic(const Level& l) {
    switch (l.type) {
        case Level::Type::A: {
            std::vector<EdgeUse> w;
            for (int j = 0; j < l.param; ++j) {
                int a = 2 * j, b = 2 * j + 1;
                w.push_back({a, true});
                w.push_back({b, true});
                w.push_back({a, false});
                w.push_back({b, false});
            }
            w.push_back({2 * l.param, true});
            return euler_of({w});
        }
        case Level::Type::B:
            return euler_of({{{0, true}, {1, true}, {0, false}, {2, true}}});
        case Level::Type::R:
            return euler_of({holed_disk(l.param)});
        case Level::Type::S:
            return euler_of({holed_disk(2)});
    }
    return 0;
}

std::string schedule_csv(const AbrsSchedule& s) {
    std::string out = "level,type,parameter,handles\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Level& l = s[i];
        std::string t = l.str().substr(0, 1);
        bool has_param = l.type == Level::Type::A || l.type == Level::Type::R;
        out += std::to_string(i + 1) + "," + t + "," + (has_param ? std::to_string(l.param) : "") + "," +
               std::to_string(level_handles(l)) + "\n";
    }
    return out;
}

}  // namespace dslice
