#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stabregion/collection.hpp"

#include "test_util.hpp"

using namespace stabreg;

namespace {

HomDegrees degrees(long long k01, long long k02, long long k03, long long k12, long long k13,
                   long long k23) {
    HomDegrees k;
    k.k01 = ExtInt(k01);
    k.k02 = ExtInt(k02);
    k.k03 = ExtInt(k03);
    k.k12 = ExtInt(k12);
    k.k13 = ExtInt(k13);
    k.k23 = ExtInt(k23);
    return k;
}

ShiftVector shift(long long p1, long long p2, long long p3) {
    return ShiftVector{0, Int(p1), Int(p2), Int(p3)};
}

}  // namespace

TEST_CASE("quadric preset and its bounds") {
    const HomDegrees k = preset_quadric();
    CHECK(k.k01 == ExtInt(0));
    CHECK(k.k02 == ExtInt(0));
    CHECK(k.k03 == ExtInt(0));
    CHECK(k.k12 == ExtInt(0));
    CHECK(k.k13 == ExtInt(0));
    CHECK(k.k23 == ExtInt(0));

    const Bounds b = derive_bounds(k);
    CHECK(b.K02 == ExtInt(-1));
    CHECK(b.K13 == ExtInt(-1));
    CHECK(b.K03 == ExtInt(-2));
}

TEST_CASE("derive_bounds fixed examples") {
    SUBCASE("min dominated by k02") {
        const Bounds b = derive_bounds(degrees(5, 1, 100, 5, 100, 100));
        CHECK(b.K02 == ExtInt(1));
    }
    SUBCASE("direct evaluation of the three min formulas") {
        const Bounds b = derive_bounds(degrees(1, 2, 3, 1, 2, 1));
        CHECK(b.K02 == ExtInt(1));
        CHECK(b.K13 == ExtInt(1));
        CHECK(b.K03 == ExtInt(1));
    }
    SUBCASE("infinite entries propagate through min and sums") {
        HomDegrees k = degrees(0, 0, 0, 0, 0, 0);
        k.k02 = ExtInt::inf();
        k.k01 = ExtInt::inf();
        const Bounds b = derive_bounds(k);
        CHECK(b.K02 == ExtInt::inf());   // min{inf, inf + k12 - 1}
        CHECK(b.K13 == ExtInt(-1));
        CHECK(b.K03 == ExtInt(0));       // k03 survives
    }
}

TEST_CASE("derive_bounds never exceeds the direct degrees") {
    testutil::SplitMix64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        const HomDegrees k = degrees(rng.range(-6, 6), rng.range(-6, 6), rng.range(-6, 6),
                                     rng.range(-6, 6), rng.range(-6, 6), rng.range(-6, 6));
        const Bounds b = derive_bounds(k);
        CHECK(b.K02 <= k.k02);
        CHECK(b.K13 <= k.k13);
        CHECK(b.K03 <= k.k03);
    }
}

TEST_CASE("raising any degree never lowers a derived bound") {
    testutil::SplitMix64 rng(8);
    for (int t = 0; t < 2000; ++t) {
        HomDegrees k = degrees(rng.range(-6, 6), rng.range(-6, 6), rng.range(-6, 6),
                               rng.range(-6, 6), rng.range(-6, 6), rng.range(-6, 6));
        const Bounds before = derive_bounds(k);
        ExtInt* slots[] = {&k.k01, &k.k02, &k.k03, &k.k12, &k.k13, &k.k23};
        ExtInt* bumped = slots[rng.below(6)];
        *bumped = *bumped + 1;
        const Bounds after = derive_bounds(k);
        CHECK(after.K02 >= before.K02);
        CHECK(after.K13 >= before.K13);
        CHECK(after.K03 >= before.K03);
    }
}

TEST_CASE("a0_contains fixed examples") {
    const Bounds quadric = derive_bounds(preset_quadric());
    CHECK(a0_contains(quadric, shift(-1, -2, -3)));
    CHECK(!a0_contains(quadric, shift(0, -2, -3)));  // violates p1 <= k01-1 = -1

    Bounds all_inf;
    all_inf.k.k01 = all_inf.k.k02 = all_inf.k.k03 = ExtInt::inf();
    all_inf.k.k12 = all_inf.k.k13 = all_inf.k.k23 = ExtInt::inf();
    all_inf = derive_bounds(all_inf.k);
    CHECK(a0_contains(all_inf, shift(1000000, -1000000, 0)));

    CHECK_THROWS_AS(a0_contains(quadric, ShiftVector{1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("a0_contains on the quadric matches the six explicit inequalities") {
    const Bounds b = derive_bounds(preset_quadric());
    for (int p1 = -6; p1 <= 0; ++p1) {
        for (int p2 = -6; p2 <= 0; ++p2) {
            for (int p3 = -6; p3 <= 0; ++p3) {
                const bool expect = p1 <= -1 && p2 <= -2 && p3 <= -3 && p2 - p1 <= -1 &&
                                    p3 - p2 <= -1 && p3 - p1 <= -2;
                REQUIRE(a0_contains(b, shift(p1, p2, p3)) == expect);
            }
        }
    }
}

TEST_CASE("a0_contains is downward closed when the gaps are preserved") {
    testutil::SplitMix64 rng(9);
    for (int t = 0; t < 2000; ++t) {
        const HomDegrees k = degrees(rng.range(-4, 6), rng.range(-4, 6), rng.range(-4, 6),
                                     rng.range(-4, 6), rng.range(-4, 6), rng.range(-4, 6));
        const Bounds b = derive_bounds(k);
        const long long p1 = rng.range(-10, 10), p2 = rng.range(-10, 10),
                        p3 = rng.range(-10, 10);
        if (!a0_contains(b, shift(p1, p2, p3))) continue;
        const long long drop = rng.range(1, 3);
        CHECK(a0_contains(b, shift(p1 - drop, p2 - drop, p3 - drop)));
    }
}

TEST_CASE("stability coordinates require positive masses") {
    const Point x{0, 0, 0, 0};
    CHECK_NOTHROW(StabilityCoordinates({Rational(1), Rational(1, 2), Rational(3), Rational(7, 5)}, x));
    CHECK_THROWS_AS(StabilityCoordinates({Rational(1), Rational(0), Rational(3), Rational(1)}, x),
                    std::invalid_argument);
    CHECK_THROWS_AS(StabilityCoordinates({Rational(1), Rational(-2), Rational(3), Rational(1)}, x),
                    std::invalid_argument);
}
