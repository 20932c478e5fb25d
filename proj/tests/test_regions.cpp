#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stabregion/regions.hpp"
#include "stabregion/verify.hpp"

#include "test_util.hpp"

using namespace stabreg;
using testutil::q;

namespace {

Point pt(const char* a, const char* b, const char* c, const char* d) {
    return Point{q(a), q(b), q(c), q(d)};
}

const Bounds quadric = derive_bounds(preset_quadric());

}  // namespace

TEST_CASE("theta1 fixed examples") {
    CHECK(theta1_contains(quadric, pt("0", "1/2", "3/2", "5/2")));
    CHECK(!theta1_contains(quadric, pt("0", "0", "1", "2")));  // boundary excluded
    CHECK(theta1_contains(quadric, pt("0", "1/2", "5/2", "11/4")));
    CHECK(theta1_violations(quadric, pt("0", "0", "1", "2")) ==
          std::vector<std::string>{"x0-x1<k01", "x0-x3<K03", "x0-x2<K02"});
    CHECK(theta1_violations(quadric, pt("0", "1/2", "3/2", "5/2")).empty());
}

TEST_CASE("theta1 with an infinite bound is one-sidedly unconstrained") {
    HomDegrees k = preset_quadric();
    k.k01 = ExtInt::inf();
    const Bounds b = derive_bounds(k);
    CHECK(theta1_contains(b, pt("100", "1/2", "101", "102")));
    CHECK(!theta1_contains(b, pt("0", "5", "3/2", "5/2")));  // x1-x2 too big
}

TEST_CASE("s3 fixed examples") {
    CHECK(s3_contains(pt("0", "-1/2", "-1/2", "-1/2")));
    CHECK(!s3_contains(pt("0", "-1/2", "1/2", "-1/4")));  // z1-z2 = -1 exactly
    CHECK(s3_contains(pt("17/3", "17/3", "17/3", "17/3")));
}

TEST_CASE("candidate_shifts fixed examples") {
    const auto c = candidate_shifts(pt("0", "1/2", "3/2", "5/2"));
    REQUIRE(c.size() == 8);
    // lexicographically increasing, all floors first
    CHECK(c.front() == ShiftVector{0, -1, -2, -3});
    CHECK(c.back() == ShiftVector{0, 0, -1, -2});
    for (const auto& p : c) {
        CHECK((p.p1 == -1 || p.p1 == 0));
        CHECK((p.p2 == -2 || p.p2 == -1));
        CHECK((p.p3 == -3 || p.p3 == -2));
    }

    const auto z = candidate_shifts(pt("0", "0", "0", "0"));
    REQUIRE(z.size() == 8);
    for (const auto& p : z) {
        CHECK((p.p1 == 0 || p.p1 == 1));
        CHECK((p.p2 == 0 || p.p2 == 1));
        CHECK((p.p3 == 0 || p.p3 == 1));
    }
}

TEST_CASE("candidates put every coordinate in the half-open window") {
    SplitMix64 rng(301);
    for (int t = 0; t < 5000; ++t) {
        const Point x = testutil::random_point(rng, 16, 5);
        for (const auto& p : candidate_shifts(x)) {
            const Point z = shifted(x, p);
            for (int i = 1; i < 4; ++i) {
                CHECK(z[i] > x.x0 - 1);
                CHECK(z[i] <= x.x0 + 1);
            }
        }
    }
}

TEST_CASE("theta2 fixed examples") {
    SUBCASE("all-floors witness") {
        const auto w = theta2_contains(quadric, pt("0", "1/2", "3/2", "5/2"));
        REQUIRE(w.has_value());
        CHECK(w->shift == ShiftVector{0, -1, -2, -3});
        CHECK(w->z == pt("0", "-1/2", "-1/2", "-1/2"));
    }
    SUBCASE("no witness on a stratum point") {
        CHECK(!theta2_contains(quadric, pt("0", "1/2", "5/2", "11/4")).has_value());
    }
    SUBCASE("another all-floors witness") {
        const auto w = theta2_contains(quadric, pt("0", "1/4", "11/10", "9/4"));
        REQUIRE(w.has_value());
        CHECK(w->shift == ShiftVector{0, -1, -2, -3});
        CHECK(w->z == pt("0", "-3/4", "-9/10", "-3/4"));
    }
}

TEST_CASE("theta2 witnesses are valid and imply theta1") {
    SplitMix64 rng(302);
    for (int t = 0; t < 4000; ++t) {
        const HomDegrees k = random_collection(rng.next());
        const Bounds b = derive_bounds(k);
        const Point x = testutil::random_point(rng, 16, 8);
        const auto w = theta2_contains(b, x);
        if (!w) continue;
        CHECK(theta1_contains(b, x));
        CHECK(a0_contains(b, w->shift));
        CHECK(s3_contains(w->z));
        CHECK(shifted(x, w->shift) == w->z);
        CHECK(w->shift.p0 == 0);
    }
}

TEST_CASE("theta2 returns the lexicographically smallest feasible candidate") {
    SplitMix64 rng(303);
    int found = 0;
    for (int t = 0; t < 4000; ++t) {
        const HomDegrees k = random_collection(rng.next());
        const Bounds b = derive_bounds(k);
        const Point x = testutil::random_point(rng, 16, 8);
        const auto w = theta2_contains(b, x);
        if (!w) continue;
        ++found;
        for (const auto& p : candidate_shifts(x)) {
            if (p == w->shift) break;  // nothing feasible strictly before it
            CHECK(!(a0_contains(b, p) && s3_contains(shifted(x, p))));
        }
    }
    CHECK(found > 100);
}

// Exhaustiveness of the candidate set: any admissible shift in a wide box
// that lands x + p inside S^3 must already be one of the 8 candidates.
TEST_CASE("candidate exhaustiveness against a random admissible shift") {
    SplitMix64 rng(304);
    int tested = 0;
    while (tested < 10000) {
        const HomDegrees k = random_collection(rng.next());
        const Bounds b = derive_bounds(k);
        const ShiftVector p{0, Int(rng.range(-10, 10)), Int(rng.range(-10, 10)),
                            Int(rng.range(-10, 10))};
        if (!a0_contains(b, p)) continue;
        // sample z with all pairwise differences inside (-1,1), then pull back
        const Rational z0 = testutil::random_rational(rng, 8, 3);
        Point z{z0, 0, 0, 0};
        Rational* zi[3] = {&z.x1, &z.x2, &z.x3};
        for (auto* slot : zi) {
            *slot = z0 + Rational(rng.range(-239, 239), 480);  // within (-1/2, 1/2)
        }
        REQUIRE(s3_contains(z));
        const Point x{z.x0, z.x1 - Rational(p.p1), z.x2 - Rational(p.p2),
                      z.x3 - Rational(p.p3)};
        const auto candidates = candidate_shifts(x);
        bool present = false;
        for (const auto& c : candidates) present = present || c == p;
        REQUIRE(present);
        ++tested;
    }
}
