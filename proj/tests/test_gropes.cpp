#include <gtest/gtest.h>

#include <functional>

#include "dslice/errors.hpp"
#include "dslice/gropes.hpp"
#include "support.hpp"

using namespace dslice;

namespace {

Branch cap(int strand_hits, const std::vector<Path>& sheets = {}) {
    Branch b;
    for (int i = 0; i < strand_hits; ++i) b.cap.intersections.push_back(SheetRef::strand("K"));
    for (const auto& p : sheets) b.cap.intersections.push_back(SheetRef::sheet(p));
    return b;
}

Branch sub(Surface s) {
    Branch b;
    b.sub.push_back(std::move(s));
    return b;
}

Surface surf(std::vector<std::pair<Branch, Branch>> pairs) {
    Surface s;
    for (auto& [l, r] : pairs) s.pairs.push_back(Pair{std::move(l), std::move(r)});
    return s;
}

GropeTree tree(Surface s, int boundary = 1) { return GropeTree{boundary, std::move(s)}; }

long long caps_max_hits(const Surface& s) {
    long long m = 0;
    for (const auto& p : s.pairs)
        for (Side side : {Side::L, Side::R}) {
            const Branch& b = p.side(side);
            m = std::max<long long>(m, b.is_cap() ? static_cast<long long>(b.cap.intersections.size()) : caps_max_hits(b.surface()));
        }
    return m;
}

bool nonbase_genus_one(const Surface& s, bool base) {
    if (!base && s.genus() != 1) return false;
    for (const auto& p : s.pairs)
        for (Side side : {Side::L, Side::R})
            if (!p.side(side).is_cap() && !nonbase_genus_one(p.side(side).surface(), false)) return false;
    return true;
}

bool same(const Surface& a, const Surface& b) {
    if (a.genus() != b.genus()) return false;
    for (int i = 0; i < a.genus(); ++i)
        for (Side side : {Side::L, Side::R}) {
            const Branch& x = a.pairs[i].side(side);
            const Branch& y = b.pairs[i].side(side);
            if (x.is_cap() != y.is_cap()) return false;
            if (x.is_cap() ? x.cap.intersections != y.cap.intersections : !same(x.surface(), y.surface())) return false;
        }
    return true;
}

const Path kL0{{0, Side::L}};

}  // namespace

TEST(Height, BaseCases) {
    EXPECT_EQ(grope_height(tree(surf({{cap(0), cap(0)}}))), HalfInt::of(1));
    EXPECT_EQ(grope_height(tree(surf({{cap(0), sub(surf({{cap(0), cap(0)}}))}}))), HalfInt::half_above(1));
    EXPECT_TRUE(grope_height(tree(Surface{}, 2)).unbounded);
    for (int d = 1; d <= 6; ++d) {
        GropeTree u = tree(uniform_surface(d, 1, "K"));
        EXPECT_EQ(grope_height(u), HalfInt::of(d));
    }
}

TEST(Height, MatchesRecursiveOracle) {
    std::mt19937_64 rng(31);
    oracle::GropeGen gen{rng};
    for (int i = 0; i < 200; ++i) {
        GropeTree g = gen();
        EXPECT_EQ(grope_height(g).twice, oracle::height_twice(g.base)) << i;
    }
}

TEST(Height, ModelGropesRealizeTheirHeight) {
    for (long long t = 2; t <= 12; ++t)
        for (int genus = 1; genus <= 3; ++genus)
            EXPECT_EQ(grope_height(model_grope(1, genus, HalfInt::from_twice(t), 1)), HalfInt::from_twice(t));
}

TEST(Validate, RejectsDanglingReference) {
    GropeTree g = tree(surf({{cap(0, {kL0}), cap(0)}}));
    EXPECT_THROW(validate_grope(g), Error);
    GropeTree e = tree(surf({{sub(Surface{}), cap(0)}}));
    EXPECT_THROW(validate_grope(e), Error);
}

TEST(Contract, SymmetricDoublesBothCaps) {
    GropeTree g = tree(surf({{sub(surf({{cap(1), cap(2)}})), sub(surf({{cap(0), cap(0)}}))}}));
    ASSERT_EQ(grope_height(g), HalfInt::of(2));
    GropeResult r = contract(g, kL0, ContractMode::Symmetric);
    const Branch& b = r.tree.base.pairs[0].left;
    ASSERT_TRUE(b.is_cap());
    EXPECT_EQ(b.cap.intersections.size(), 6u);
    EXPECT_EQ(r.delta.at(2), 3);
    EXPECT_TRUE(r.delta.only_high_index());

    GropeResult a = contract(g, kL0, ContractMode::Asymmetric);
    EXPECT_EQ(a.tree.base.pairs[0].left.cap.intersections.size(), 2u);
}

TEST(Contract, CleanCapsGiveZeroDelta) {
    GropeTree g = tree(surf({{sub(surf({{cap(0), cap(0)}})), sub(surf({{cap(0), cap(0)}}))}}));
    GropeResult r = contract(g, kL0, ContractMode::Symmetric);
    EXPECT_TRUE(r.tree.base.pairs[0].left.cap.intersections.empty());
    EXPECT_EQ(r.delta.at(2), 0);
}

TEST(Contract, AllTopStagesLowersByOne) {
    for (int d = 2; d <= 5; ++d) {
        GropeTree g = tree(uniform_surface(d, 1, "K"));
        // contract every top-stage surface, deepest first
        GropeTree cur = g;
        std::function<void(const Surface&, Path&, std::vector<Path>&)> tops = [&](const Surface& s, Path& at,
                                                                                    std::vector<Path>& out) {
            bool top = true;
            for (int i = 0; i < s.genus(); ++i)
                for (Side side : {Side::L, Side::R}) {
                    const Branch& b = s.pairs[i].side(side);
                    if (b.is_cap()) continue;
                    top = false;
                    at.push_back({i, side});
                    tops(b.surface(), at, out);
                    at.pop_back();
                }
            if (top && !at.empty()) out.push_back(at);
        };
        std::vector<Path> paths;
        Path at;
        tops(cur.base, at, paths);
        for (const auto& p : paths) cur = contract(cur, p, ContractMode::Symmetric).tree;
        EXPECT_EQ(grope_height(cur), HalfInt::of(d - 1)) << d;
    }
}

TEST(Contract, RejectsNonTopStage) {
    GropeTree g = tree(uniform_surface(3, 0, "K"));
    EXPECT_THROW(contract(g, kL0, ContractMode::Symmetric), Error);
}

TEST(PushDown, MovesOneStageDown) {
    // cap at depth 2 meets the depth-1 sheet /0L
    Path cap_path{{0, Side::L}, {0, Side::L}};
    GropeTree g = tree(surf({{sub(surf({{cap(0, {kL0}), cap(0)}})), sub(surf({{cap(0), cap(0)}}))}}));
    validate_grope(g);
    GropeResult r = push_down(g, cap_path, 0);
    const Cap& c = cap_at(r.tree, cap_path);
    ASSERT_EQ(c.intersections.size(), 2u);
    for (const auto& ref : c.intersections) EXPECT_TRUE(ref.path.empty());
    EXPECT_EQ(total_intersections(r.tree), total_intersections(g) + 1);
    EXPECT_EQ(r.delta.at(2), 1);
    EXPECT_EQ(grope_height(r.tree), grope_height(g));
}

TEST(PushDown, RejectsBaseIntersection) {
    GropeTree g = tree(surf({{cap(0, {Path{}}), cap(0)}}));
    EXPECT_THROW(push_down(g, Path{{0, Side::L}}, 0), Error);
    GropeTree clean = tree(surf({{cap(0), cap(0)}}));
    EXPECT_THROW(push_down(clean, Path{{0, Side::L}}, 0), Error);
}

TEST(PushDown, FixpointReachesBase) {
    std::mt19937_64 rng(32);
    oracle::GropeGen gen{rng};
    for (int i = 0; i < 100; ++i) {
        GropeTree g = gen();
        GropeResult r = push_down_all(g);
        EXPECT_TRUE(base_only_intersections(r.tree));
        EXPECT_EQ(grope_height(r.tree), grope_height(g));
        EXPECT_EQ(total_intersections(r.tree) - total_intersections(g), r.delta.at(2));
        EXPECT_TRUE(r.delta.only_high_index());
    }
}

TEST(Split, GenusTwoTopSurface) {
    GropeTree g = tree(surf({{sub(surf({{cap(0), cap(0)}, {cap(0), cap(0)}})), cap(0)}}));
    GropeResult r = split(g);
    ASSERT_EQ(r.tree.base.genus(), 2);
    for (const auto& p : r.tree.base.pairs) {
        ASSERT_FALSE(p.left.is_cap());
        EXPECT_EQ(p.left.surface().genus(), 1);
    }
    EXPECT_EQ(grope_height(r.tree), grope_height(g));
}

TEST(Split, CapWithThreeIntersections) {
    GropeTree g = tree(surf({{cap(3), cap(0)}}));
    GropeResult r = split(g);
    EXPECT_LE(caps_max_hits(r.tree.base), 1);
    EXPECT_EQ(total_intersections(r.tree), 3);
    EXPECT_EQ(grope_height(r.tree), HalfInt::of(1));
}

TEST(Split, DyadicIsFixed) {
    GropeTree g = tree(uniform_surface(3, 1, "K"));
    ASSERT_TRUE(is_dyadic(g));
    GropeResult r = split(g);
    EXPECT_TRUE(r.delta.counts.empty());
    EXPECT_TRUE(same(r.tree.base, g.base));
}

TEST(Split, RandomTreesBecomeDyadic) {
    std::mt19937_64 rng(33);
    oracle::GropeGen gen{rng};
    gen.max_hits = 1;
    for (int i = 0; i < 100; ++i) {
        GropeTree g = gen();
        GropeResult r = split(g);
        EXPECT_TRUE(is_dyadic(r.tree)) << i;
        EXPECT_TRUE(nonbase_genus_one(r.tree.base, true));
        EXPECT_LE(caps_max_hits(r.tree.base), 1);
        EXPECT_TRUE(base_only_intersections(r.tree));
        EXPECT_EQ(grope_height(r.tree), grope_height(g)) << i;
        EXPECT_TRUE(r.delta.only_high_index());
        GropeResult again = split(r.tree);
        EXPECT_TRUE(again.delta.counts.empty());
    }
}

TEST(LowerHeight, ThreeToOneAndAHalf) {
    GropeTree g = model_grope(1, 1, HalfInt::of(3), 1);
    GropeResult r = lower_height(g, HalfInt::half_above(1));
    EXPECT_EQ(grope_height(r.tree), HalfInt::half_above(1));
    EXPECT_TRUE(r.delta.only_high_index());
    EXPECT_THROW(lower_height(g, HalfInt::of(3)), Error);
}

TEST(LowerHeight, EveryHalfStep) {
    std::mt19937_64 rng(34);
    oracle::GropeGen gen{rng};
    gen.max_depth = 4;
    for (int i = 0; i < 100; ++i) {
        GropeTree g = gen();
        HalfInt h = grope_height(g);
        for (long long t = h.twice - 1; t >= 2; --t) {
            GropeResult r = lower_height(g, HalfInt::from_twice(t));
            EXPECT_EQ(grope_height(r.tree), HalfInt::from_twice(t)) << i << " " << t;
            EXPECT_TRUE(r.delta.only_high_index());
        }
    }
}

TEST(Product, HeightsAdd) {
    GropeTree h1 = model_grope(1, 1, HalfInt::of(1), 1);
    EXPECT_EQ(grope_height(product(h1, h1)), HalfInt::of(2));
    // H_2 . H_1 . H_0 . H with H of height 2
    GropeTree acc = model_grope(2, 1, HalfInt::of(2), 1);
    for (int k = 0; k < 3; ++k) acc = product(h1, acc);
    EXPECT_EQ(grope_height(acc), HalfInt::of(5));
}

TEST(Product, TrivialConcordance) {
    GropeTree g = model_grope(1, 1, HalfInt::of(2), 1);
    GropeTree trivial{2, Surface{}};
    EXPECT_EQ(grope_height(product(g, trivial)), HalfInt::of(2));
}

TEST(Product, RandomHeightsAdd) {
    std::mt19937_64 rng(35);
    oracle::GropeGen gen{rng};
    std::uniform_int_distribution<int> hd(1, 3);
    int checked = 0;
    while (checked < 100) {
        GropeTree g2 = gen(rng() % 2 ? 1 : 2);
        GropeTree g1 = model_grope(1, 1 + static_cast<int>(rng() % 2), HalfInt::of(hd(rng)), 1);
        // every cap of the second factor needs a recorded intersection
        GropeTree loaded = g2;
        std::function<void(Surface&)> load = [&](Surface& s) {
            for (auto& p : s.pairs)
                for (Side side : {Side::L, Side::R}) {
                    Branch& b = p.side(side);
                    if (b.is_cap()) {
                        if (b.cap.intersections.empty()) b.cap.intersections.push_back(SheetRef::strand("K"));
                    } else {
                        load(b.surface());
                    }
                }
        };
        load(loaded.base);
        GropeTree prod = product(g1, loaded);
        EXPECT_EQ(grope_height(prod), grope_height(g1) + grope_height(loaded));
        ++checked;
    }
}

TEST(Product, MismatchedKinds) {
    GropeTree annulus = model_grope(2, 1, HalfInt::of(1), 1);
    GropeTree h = model_grope(1, 1, HalfInt::of(1), 1);
    EXPECT_THROW(product(annulus, h), Error);
    EXPECT_THROW(product(model_grope(1, 1, HalfInt::half_above(1), 1), h), Error);
}
