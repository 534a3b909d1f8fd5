#include <gtest/gtest.h>

#include "dslice/errors.hpp"
#include "dslice/towers.hpp"
#include "support.hpp"

using namespace dslice;

namespace {

TowerTree sphere(std::vector<TowerPoint> pts, std::vector<WhitneyDisk> disks = {}) {
    TowerTree t;
    t.points = std::move(pts);
    t.disks = std::move(disks);
    return t;
}

}  // namespace

TEST(TowerHeight, ImmersedSphere) {
    EXPECT_EQ(tower_height(sphere({{0, 0}, {0, 0}})), HalfInt::of(1));
    EXPECT_TRUE(tower_height(sphere({})).unbounded);
}

TEST(TowerHeight, AllPairedIsTwo) {
    EXPECT_EQ(tower_height(sphere({{0, 0}, {0, 0}}, {{0, 1, std::nullopt}})), HalfInt::of(2));
    EXPECT_EQ(tower_height(sphere({{0, 0}, {0, 0}}, {{0, 1, 2}})), HalfInt::of(2));
}

TEST(TowerHeight, LabelMismatch) {
    EXPECT_THROW(tower_height(sphere({{0, 0}, {0, 0}}, {{0, 1, 3}})), Error);
}

TEST(TowerHeight, PairingAcrossHeights) {
    // disk 0 (height 2) meets the base twice; pairing a base point with a disk point is undefined
    TowerTree t = sphere({{0, 0}, {0, 0}, {0, 1}, {0, 0}}, {{0, 1, std::nullopt}, {2, 3, std::nullopt}});
    try {
        tower_height(t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UndefinedHeight);
    }
}

TEST(TowerHeight, ModelTowers) {
    for (long long tw = 2; tw <= 10; ++tw)
        for (int pairs = 1; pairs <= 3; ++pairs) {
            TowerTree t = model_tower(pairs, HalfInt::from_twice(tw));
            EXPECT_EQ(tower_height(t), HalfInt::from_twice(tw)) << tw << " " << pairs;
            EXPECT_TRUE(tower_has_height(t, HalfInt::from_twice(tw)));
        }
}

TEST(TowerOps, RemoveDiskCascades) {
    TowerTree t = model_tower(1, HalfInt::of(4));
    std::size_t before = t.disks.size();
    TowerResult r = remove_disk(t, 0);
    EXPECT_LT(r.tree.disks.size(), before);
    EXPECT_EQ(r.delta.at(2), static_cast<long long>(before - r.tree.disks.size()));
    EXPECT_TRUE(r.delta.only_high_index());
    validate_tower(r.tree);
}

TEST(TowerOps, FingerMoveAddsThreeHandle) {
    TowerTree t = sphere({{0, 0}});
    TowerResult r = finger_move(t, 0, 0);
    EXPECT_EQ(r.tree.points.size(), 3u);
    EXPECT_EQ(r.tree.disks.size(), 1u);
    EXPECT_EQ(r.delta.at(3), 1);
    EXPECT_EQ(r.delta.at(2), 0);
}

TEST(TowerOps, LowerHeightHitsEveryHalfStep) {
    for (long long tw = 3; tw <= 10; ++tw) {
        TowerTree t = model_tower(2, HalfInt::from_twice(tw));
        for (long long target = tw - 1; target >= 2; --target) {
            TowerResult r = lower_height(t, HalfInt::from_twice(target));
            EXPECT_EQ(tower_height(r.tree), HalfInt::from_twice(target)) << tw << " -> " << target;
            EXPECT_TRUE(r.delta.only_high_index());
        }
        EXPECT_THROW(lower_height(t, HalfInt::from_twice(tw)), Error);
    }
}

TEST(Schneiderman, GropeToTower) {
    GropeTree g = model_grope(1, 1, HalfInt::of(2), 1);
    GropeToTower r = schneiderman(g);
    EXPECT_EQ(tower_height(r.tower), HalfInt::of(2));
    EXPECT_TRUE(r.delta.only_high_index());
}

TEST(Schneiderman, TowerToGrope) {
    TowerTree t = model_tower(1, HalfInt::half_above(1));
    TowerToGrope r = schneiderman(t);
    EXPECT_EQ(grope_height(r.grope), HalfInt::half_above(1));
    EXPECT_TRUE(r.delta.counts.empty());
}

TEST(Schneiderman, RandomRoundTrips) {
    std::mt19937_64 rng(41);
    oracle::GropeGen gen{rng};
    gen.max_hits = 1;
    for (int i = 0; i < 100; ++i) {
        GropeTree g = gen(rng() % 2 ? 0 : 1);
        HalfInt h = grope_height(g);
        GropeToTower t = schneiderman(g);
        EXPECT_EQ(tower_height(t.tower), h) << i;
        EXPECT_TRUE(t.delta.only_high_index());
        TowerToGrope back = schneiderman(t.tower);
        EXPECT_EQ(grope_height(back.grope), h) << i;
        EXPECT_EQ(tower_height(schneiderman(back.grope).tower), h);
    }
}
