#include <gtest/gtest.h>

#include "dslice/catalog.hpp"
#include "dslice/errors.hpp"
#include "support.hpp"

using namespace dslice;

namespace {

SeifertMatrix sm(std::initializer_list<std::initializer_list<long>> rows) { return SeifertMatrix(IntMatrix(rows)); }

const SeifertMatrix kTrefoil = sm({{-1, 1}, {0, -1}});
const SeifertMatrix k61 = sm({{1, 1}, {0, -2}});
const SeifertMatrix k946 = sm({{0, 2}, {1, 0}});
const SeifertMatrix kFig8 = sm({{1, 1}, {0, -1}});

ZPoly zp(std::vector<long> c) {
    std::vector<Integer> v(c.begin(), c.end());
    return ZPoly(v);
}

}  // namespace

TEST(Seifert, RejectsNonUnimodular) {
    EXPECT_THROW(sm({{1, 0}, {0, 1}}), Error);
    EXPECT_THROW(sm({{1, 2}, {0, 1}}), Error);
    EXPECT_THROW(SeifertMatrix(IntMatrix(3, 3)), Error);
}

TEST(Alexander, UnknotIsOne) { EXPECT_EQ(alexander_polynomial(SeifertMatrix::unknot()).str(), "1"); }

TEST(Alexander, CatalogValues) {
    EXPECT_EQ(alexander_polynomial(k61).to_poly(), zp({2, -5, 2}));
    EXPECT_EQ(alexander_polynomial(k946).to_poly(), zp({2, -5, 2}));
    EXPECT_EQ(zp({-1, 2}) * zp({-2, 1}), zp({2, -5, 2}));
    EXPECT_EQ(alexander_polynomial(kTrefoil).to_poly(), zp({1, -1, 1}));
}

TEST(Alexander, MatchesCofactorOracleOnRandomMatrices) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int g = 1 + trial % 3;
        IntMatrix v = oracle::random_seifert(rng, g, 3);
        SeifertMatrix s(v);
        EXPECT_EQ(alexander_polynomial(s).to_poly(), oracle::alexander(v)) << trial;
        EXPECT_TRUE(alexander_polynomial(s).is_symmetric());
    }
}

TEST(Signature, HandValues) {
    EXPECT_EQ(signature_at(SeifertMatrix::unknot(), turn(1, 3)), 0);
    EXPECT_EQ(signature_at(kTrefoil, turn(1, 2)), -2);
    EXPECT_EQ(signature_at(k946, turn(1, 4)), 0);
    EXPECT_EQ(signature_at(mirror(kTrefoil), turn(1, 2)), 2);
}

TEST(Signature, MatchesDescartesOracle) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix v = oracle::random_seifert(rng, 1 + trial % 3, 3);
        SeifertMatrix s(v);
        for (int p : {2, 4}) {
            if (is_jump_point(s, turn(1, p))) continue;
            EXPECT_EQ(signature_at(s, turn(1, p)), oracle::lt_signature(v, p)) << trial << " p=" << p;
        }
    }
}

TEST(Signature, JumpPointRaises) {
    // trefoil roots are e^{+-i pi/3}
    EXPECT_TRUE(is_jump_point(kTrefoil, turn(1, 6)));
    try {
        signature_at(kTrefoil, turn(1, 6));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::JumpPoint);
    }
    OneSidedSignature lim = signature_limits(kTrefoil, turn(1, 6));
    EXPECT_EQ(lim.below, 0);
    EXPECT_EQ(lim.above, -2);
}

TEST(Signature, ConnectedSumIsAdditive) {
    SeifertMatrix zero = connected_sum(kTrefoil, mirror(kTrefoil));
    for (auto w : {turn(1, 2), turn(1, 4), turn(1, 5), turn(2, 7), turn(1, 12)}) {
        if (is_jump_point(zero, w)) continue;
        EXPECT_EQ(signature_at(zero, w), 0);
    }
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        SeifertMatrix a(oracle::random_seifert(rng, 1, 2)), b(oracle::random_seifert(rng, 1, 2));
        SeifertMatrix ab = connected_sum(a, b);
        for (auto w : {turn(1, 2), turn(1, 4), turn(2, 5)}) {
            if (is_jump_point(ab, w)) continue;
            EXPECT_EQ(signature_at(ab, w), signature_at(a, w) + signature_at(b, w));
        }
    }
}

TEST(Signature, UnknotSumIsIdentity) {
    EXPECT_EQ(connected_sum(SeifertMatrix::unknot(), k61), k61);
}

TEST(Arf, Values) {
    EXPECT_EQ(arf(SeifertMatrix::unknot()), 0);
    EXPECT_EQ(arf(kTrefoil), 1);
    EXPECT_EQ(arf(k61), 0);
    EXPECT_EQ(arf(k946), 0);
    EXPECT_EQ(arf(kFig8), 1);
}

TEST(Arf, MatchesDeterminantRule) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix v = oracle::random_seifert(rng, 1 + trial % 2, 3);
        Integer d = oracle::alexander(v).eval(Integer(-1));
        Integer r = ((d % 8) + 8) % 8;
        EXPECT_EQ(arf(SeifertMatrix(v)), (r == 1 || r == 7) ? 0 : 1);
    }
}

TEST(Hyperbolic, Shape) {
    auto v = hyperbolicity_check(k946, HyperbolicityMode::Shape);
    EXPECT_EQ(v.kind, HyperbolicityVerdict::Kind::Hyperbolic);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(hyperbolicity_check(SeifertMatrix::unknot(), HyperbolicityMode::Shape).kind,
              HyperbolicityVerdict::Kind::Hyperbolic);
}

TEST(Hyperbolic, FactorizationRejectsTrefoil) {
    EXPECT_EQ(hyperbolicity_check(kTrefoil, HyperbolicityMode::Factorization).kind,
              HyperbolicityVerdict::Kind::FailsNecessary);
    auto v = hyperbolicity_check(k946, HyperbolicityMode::Factorization);
    ASSERT_TRUE(v.factor.has_value());
}

TEST(Hyperbolic, WitnessConjugatesToBlockForm) {
    auto v = hyperbolicity_check(k946, HyperbolicityMode::Shape);
    ASSERT_TRUE(v.witness.has_value());
    IntMatrix p = *v.witness;
    IntMatrix w = p.transpose() * k946.matrix() * p;
    EXPECT_EQ(w(0, 0), 0);
    EXPECT_EQ(w(1, 1), 0);
}

TEST(StepSignature, TrefoilJumpAtSixthRoot) {
    auto s = catalog_step_signature(kTrefoil);
    ASSERT_TRUE(s.has_value());
    ASSERT_EQ(s->jumps.size(), 1u);
    EXPECT_EQ(s->jumps[0].delta, -2);
}

TEST(Catalog, Builtin) {
    const Catalog& c = Catalog::builtin();
    for (const char* n : {"unknot", "trefoil", "figure-8", "6_1", "9_46"}) EXPECT_TRUE(c.contains(n)) << n;
    EXPECT_EQ(c.get("6_1").crossing_number, 6);
    EXPECT_THROW(c.get("no_such_knot"), Error);
}
