#include <gtest/gtest.h>

#include <filesystem>

#include "dslice/errors.hpp"
#include "dslice/io.hpp"
#include "support.hpp"

using namespace dslice;

namespace {

FamilySpec standard_family(int count) {
    FamilyInput in;
    in.ribbon = in.grope_height1 = in.cyclic_alexander = true;
    J0Flags f;
    f.grope_height2 = f.arf_zero = f.from_lemma = true;
    return generate_family(3, 3, count, Rational(c_K(6) * 2), 2, in, f);
}

std::string error_text(const std::string& catalog) {
    try {
        Catalog::from_json_text(catalog, "test");
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
        return e.what();
    }
    ADD_FAILURE() << "accepted: " << catalog;
    return {};
}

}  // namespace

TEST(Catalog, Builtin) {
    const Catalog& c = Catalog::builtin();
    EXPECT_EQ(c.names(), (std::vector<std::string>{"6_1", "9_46", "figure-8", "trefoil", "unknot"}));
    EXPECT_EQ(c.get("6_1").crossing_number, 6);
    EXPECT_THROW(c.get("no_such_knot"), Error);
}

TEST(Catalog, PointersToBadEntries) {
    std::string e = error_text(R"({"version":1,"knots":[{"name":"x","seifert":[[1,0],[0,1]],"crossings":3}]})");
    EXPECT_NE(e.find("/knots/0/seifert"), std::string::npos) << e;
    e = error_text(R"({"version":1,"knots":[{"name":"a","seifert":[],"crossings":0},{"name":"b","seifert":[[1]],"crossings":3}]})");
    EXPECT_NE(e.find("/knots/1/seifert"), std::string::npos) << e;
    e = error_text(R"({"version":1,"knots":[{"name":"x","seifert":[[-1,1],[0,-1]],"crossings":3,"arf":0}]})");
    EXPECT_NE(e.find("/knots/0/arf"), std::string::npos) << e;
    e = error_text(R"({"version":1,"knots":[{"name":"x","seifert":[[-1,1],[0,-1]],"crossings":2}]})");
    EXPECT_NE(e.find("/knots/0/crossings"), std::string::npos) << e;
    e = error_text(R"({"version":2,"knots":[]})");
    EXPECT_NE(e.find("/version"), std::string::npos) << e;
    e = error_text("{not json");
    EXPECT_NE(e.find("malformed"), std::string::npos) << e;
}

TEST(Catalog, MergeConflict) {
    Catalog c = Catalog::builtin();
    Catalog extra = Catalog::from_json_text(
        R"({"version":1,"knots":[{"name":"5_2","seifert":[[-1,1],[0,-2]],"crossings":5}]})", "extra");
    c.merge(extra);
    EXPECT_TRUE(c.contains("5_2"));
    Catalog dup = Catalog::from_json_text(
        R"({"version":1,"knots":[{"name":"trefoil","seifert":[[-1,1],[0,-1]],"crossings":3}]})", "dup");
    try {
        c.merge(dup);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("trefoil"), std::string::npos);
    }
}

TEST(Json, IntegersBeyondInt64) {
    Integer big = Integer(1) << 100;
    Json j = integer_json(big);
    EXPECT_TRUE(j.is_string());
    EXPECT_EQ(integer_from(j, "x"), big);
    EXPECT_TRUE(integer_json(Integer(-7)).is_number_integer());
    EXPECT_THROW(integer_from(Json("12a"), "x"), Error);
    EXPECT_EQ(rational_from(rational_json(Rational(-3, 4)), "q"), Rational(-3, 4));
    EXPECT_EQ(half_from(half_json(HalfInt::half_above(3)), "h"), HalfInt::half_above(3));
    EXPECT_TRUE(half_from(half_json(HalfInt::infinite()), "h").unbounded);
    EXPECT_THROW(half_from(rational_json(Rational(1, 3)), "h"), Error);
}

TEST(Json, FamilyRoundTrip) {
    FamilySpec s = standard_family(3);
    Json j = family_json(s);
    FamilySpec back = family_from(parse_json(canonical(j), "family"));
    EXPECT_EQ(canonical(family_json(back)), canonical(j));
    EXPECT_EQ(back.n_copies, s.n_copies);
    EXPECT_EQ(back.primes, s.primes);
}

TEST(Json, FamilyTamperingIsRejected) {
    Json j = family_json(standard_family(2));
    Json t = j;
    t["N"] = 5;
    EXPECT_THROW(family_from(t), Error);
    t = j;
    t["primes"][0] = 11;
    EXPECT_THROW(family_from(t), Error);
    t = j;
    t["inputs"][0]["knot"] = "no_such_knot";
    EXPECT_THROW(family_from(t), Error);
    t = j;
    t.erase("c0");
    EXPECT_THROW(family_from(t), Error);
}

TEST(Json, CertificateRoundTrips) {
    FamilySpec s = standard_family(2);
    MembershipCertificate m = certify_membership(s, true);
    Json mj = certificate_json(m);
    EXPECT_EQ(canonical(certificate_json(membership_from(mj, "cert"))), canonical(mj));
    NonMembershipCertificate n = certify_nonmembership(s, {1, -1});
    Json nj = certificate_json(n);
    EXPECT_EQ(canonical(certificate_json(nonmembership_from(nj, "cert"))), canonical(nj));
    EXPECT_THROW(nonmembership_from(mj, "cert"), Error);
}

TEST(Json, GropeRoundTrips) {
    std::mt19937_64 rng(61);
    oracle::GropeGen gen{rng};
    for (int i = 0; i < 100; ++i) {
        GropeTree g = gen(rng() % 2 ? 0 : 1);
        Json j = grope_json(g);
        GropeTree back = grope_from(parse_json(canonical(j), "grope"), "grope");
        EXPECT_EQ(canonical(grope_json(back)), canonical(j)) << i;
        EXPECT_EQ(grope_height(back), grope_height(g));
    }
}

TEST(Json, CanonicalIsStable) {
    Json a = parse_json(R"({"b":1,"a":{"d":[1,2],"c":null}})", "a");
    Json b = parse_json(R"({"a":{"c":null,"d":[1,2]},"b":1})", "b");
    EXPECT_EQ(canonical(a), canonical(b));
    EXPECT_EQ(canonical(a).back(), '\n');
    FamilySpec s = standard_family(2);
    EXPECT_EQ(canonical(family_json(s)), canonical(family_json(standard_family(2))));
}

TEST(Files, SaveAndLoad) {
    auto dir = std::filesystem::temp_directory_path() / "dslice_io_test";
    std::filesystem::create_directories(dir);
    std::string path = (dir / "cert.json").string();
    Json cert = certificate_json(certify_membership(standard_family(1)));
    save_certificate(cert, path);
    EXPECT_EQ(read_file(path), canonical(cert));
    std::string cat = (dir / "cat.json").string();
    write_file(cat, R"({"version":1,"knots":[{"name":"5_2","seifert":[[-1,1],[0,-2]],"crossings":5}]})");
    EXPECT_TRUE(load_catalog(cat).contains("5_2"));
    EXPECT_THROW(read_file((dir / "missing.json").string()), Error);
    std::filesystem::remove_all(dir);
}
