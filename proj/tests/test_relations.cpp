#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stabregion/relations.hpp"

#include "test_util.hpp"

#include <vector>

using namespace stabreg;
using testutil::q;

namespace {

Point pt(const char* a, const char* b, const char* c, const char* d) {
    return Point{q(a), q(b), q(c), q(d)};
}

// Independent oracle: evaluate the defining floor equation for a candidate
// exponent instead of computing it.
bool relation_holds(const Point& x, int i, int j, int alpha) {
    return floor(x.x0 - x[j]) - floor(x.x0 - x[i]) == floor(x[i] - x[j]) + alpha;
}

// All rationals p/q in [0, 1) with q <= max_den, reduced.
std::vector<Rational> fractional_grid(int max_den) {
    std::vector<Rational> out;
    for (int den = 1; den <= max_den; ++den) {
        for (int num = 0; num < den; ++num) {
            const Rational v(num, den);
            bool seen = false;
            for (const Rational& w : out) {
                if (w == v) { seen = true; break; }
            }
            if (!seen) out.push_back(v);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("relation_alpha fixed examples") {
    CHECK(relation_alpha(pt("0", "1/2", "3/2", "5/2"), 1, 2) == 0);
    CHECK(relation_alpha(pt("0", "1/2", "5/2", "11/4"), 2, 3) == 1);
    CHECK(relation_alpha(pt("7", "3", "-2", "-5"), 1, 2) == 0);
    CHECK(relation_alpha(pt("7", "3", "-2", "-5"), 1, 3) == 0);
    CHECK(relation_alpha(pt("7", "3", "-2", "-5"), 2, 3) == 0);
    CHECK_THROWS_AS(relation_alpha(pt("0", "0", "0", "0"), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(relation_alpha(pt("0", "0", "0", "0"), 2, 2), std::invalid_argument);
}

TEST_CASE("relation_profile fixed examples") {
    CHECK(relation_profile(pt("0", "1/2", "3/2", "5/2")) == RelationProfile{0, 0, 0});
    CHECK(relation_profile(pt("0", "1/2", "5/2", "11/4")) == RelationProfile{0, 1, 1});
    CHECK(relation_profile(pt("7", "3", "-2", "-5")) == RelationProfile{0, 0, 0});
}

TEST_CASE("is_integral_difference") {
    const Point x = pt("0", "1/2", "5/2", "11/4");
    CHECK(is_integral_difference(x, 1, 2));
    CHECK(!is_integral_difference(x, 2, 3));
    CHECK(!is_integral_difference(x, 0, 1));
    CHECK(is_integral_difference(pt("4", "-1", "0", "19"), 0, 3));
    const Point ints = pt("3", "-7", "0", "12");
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) CHECK(is_integral_difference(ints, i, j));
    }
}

TEST_CASE("exclusivity: exactly one exponent satisfies the defining equation") {
    SplitMix64 rng(201);
    for (int t = 0; t < 20000; ++t) {
        const Point x = testutil::random_point(rng, 32, 6);
        for (int i = 1; i <= 3; ++i) {
            for (int j = i + 1; j <= 3; ++j) {
                const bool h0 = relation_holds(x, i, j, 0);
                const bool h1 = relation_holds(x, i, j, 1);
                REQUIRE(h0 != h1);
                REQUIRE(relation_holds(x, i, j, relation_alpha(x, i, j)));
            }
        }
    }
}

TEST_CASE("triple law: profiles (0,1,0) and (1,0,1) never occur") {
    SplitMix64 rng(202);
    for (int t = 0; t < 100000; ++t) {
        const Point x = testutil::random_point(rng, 16, 5);
        const RelationProfile p = relation_profile(x);
        REQUIRE(p.valid());
        REQUIRE(!(p == RelationProfile{0, 1, 0}));
        REQUIRE(!(p == RelationProfile{1, 0, 1}));
    }
}

TEST_CASE("triple law on the exhaustive fractional grid, denominators <= 6") {
    const auto grid = fractional_grid(6);
    SplitMix64 rng(203);
    for (const Rational& f1 : grid) {
        for (const Rational& f2 : grid) {
            for (const Rational& f3 : grid) {
                const long long a1 = rng.range(-3, 3), a2 = rng.range(-3, 3),
                                a3 = rng.range(-3, 3);
                const Point x{Rational(0), -Rational(a1) - f1, -Rational(a2) - f2,
                              -Rational(a3) - f3};
                const RelationProfile p = relation_profile(x);
                REQUIRE(p.valid());
            }
        }
    }
}

TEST_CASE("integral difference forces exponent zero") {
    SplitMix64 rng(204);
    for (int t = 0; t < 20000; ++t) {
        Point x = testutil::random_point(rng, 16, 5);
        const int pick = static_cast<int>(rng.below(3));
        const int i = pick == 2 ? 2 : 1;
        const int j = pick == 0 ? 2 : 3;
        // force xi - xj integral
        Rational& xj = j == 2 ? x.x2 : x.x3;
        xj = x[i] + Rational(rng.range(-4, 4));
        REQUIRE(is_integral_difference(x, i, j));
        REQUIRE(relation_alpha(x, i, j) == 0);
    }
}

TEST_CASE("shifted differences split by exponent") {
    SplitMix64 rng(205);
    for (int t = 0; t < 20000; ++t) {
        const Point x = testutil::random_point(rng, 24, 5);
        for (int i = 1; i <= 3; ++i) {
            for (int j = i + 1; j <= 3; ++j) {
                const Rational d = (x[i] + Rational(floor(x.x0 - x[i]))) -
                                   (x[j] + Rational(floor(x.x0 - x[j])));
                if (relation_alpha(x, i, j) == 0) {
                    REQUIRE(d >= 0);
                    REQUIRE(d < 1);
                } else {
                    REQUIRE(d > -1);
                    REQUIRE(d < 0);
                }
            }
        }
    }
}

TEST_CASE("floor_data agrees with the scalar operations") {
    SplitMix64 rng(206);
    for (int t = 0; t < 5000; ++t) {
        const Point x = testutil::random_point(rng, 16, 5);
        const FloorData d = floor_data(x);
        CHECK(d.a[1] == floor(x.x0 - x.x1));
        CHECK(d.a[2] == floor(x.x0 - x.x2));
        CHECK(d.a[3] == floor(x.x0 - x.x3));
        CHECK(d.m12 == floor(x.x1 - x.x2));
        CHECK(d.m13 == floor(x.x1 - x.x3));
        CHECK(d.m23 == floor(x.x2 - x.x3));
        CHECK(d.a12 == relation_alpha(x, 1, 2));
        CHECK(d.a13 == relation_alpha(x, 1, 3));
        CHECK(d.a23 == relation_alpha(x, 2, 3));
        CHECK(d.int12 == is_integral_difference(x, 1, 2));
        CHECK(d.int13 == is_integral_difference(x, 1, 3));
        CHECK(d.int23 == is_integral_difference(x, 2, 3));
        CHECK(d.profile() == relation_profile(x));
    }
}
