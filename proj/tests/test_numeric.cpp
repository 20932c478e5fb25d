#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stabregion/extint.hpp"
#include "stabregion/rational.hpp"

#include "test_util.hpp"

using namespace stabreg;
using testutil::q;

TEST_CASE("floor on fixed values") {
    CHECK(floor(q("5/2")) == 2);
    CHECK(floor(q("-1/2")) == -1);
    CHECK(floor(q("-3")) == -3);
    CHECK(floor(q("0")) == 0);
    CHECK(floor(q("-7/3")) == -3);
}

TEST_CASE("ceil is floor plus one, also at integers") {
    CHECK(ceil(q("5/2")) == 3);
    CHECK(ceil(q("-1/2")) == 0);
    CHECK(ceil(q("2")) == 3);
    CHECK(ceil(q("0")) == 1);
}

TEST_CASE("frac on fixed values") {
    CHECK(frac(q("5/2")) == q("1/2"));
    CHECK(frac(q("-1/4")) == q("3/4"));
    CHECK(frac(q("7")) == 0);
}

TEST_CASE("floor_sum_defect on fixed values") {
    CHECK(floor_sum_defect(q("1/2"), q("1/4")) == 0);
    CHECK(floor_sum_defect(q("1/2"), q("3/4")) == 1);
    CHECK(floor_sum_defect(q("-1/2"), q("1/2")) == 1);
}

// Definitional oracle: floor(q) is the unique integer n with n <= q < n+1.
TEST_CASE("floor/ceil/frac definitional properties on random rationals") {
    SplitMix64 rng(101);
    for (int t = 0; t < 20000; ++t) {
        const Rational v = testutil::random_rational(rng, 64, 8);
        const Int f = floor(v);
        CHECK(Rational(f) <= v);
        CHECK(v < Rational(f + 1));
        CHECK(ceil(v) == f + 1);
        const Rational fr = frac(v);
        CHECK(fr >= 0);
        CHECK(fr < 1);
        CHECK(Rational(f) + fr == v);
    }
}

TEST_CASE("floor_sum_defect is 0 or 1") {
    SplitMix64 rng(102);
    for (int t = 0; t < 20000; ++t) {
        const Rational a = testutil::random_rational(rng, 48, 6);
        const Rational b = testutil::random_rational(rng, 48, 6);
        const Int d = floor_sum_defect(a, b);
        CHECK((d == 0 || d == 1));
    }
    // exhaustive over denominators <= 8, numerators in [-16, 16]
    for (int da = 1; da <= 8; ++da) {
        for (int na = -16; na <= 16; ++na) {
            for (int db = 1; db <= 8; ++db) {
                for (int nb = -16; nb <= 16; ++nb) {
                    const Int d = floor_sum_defect(Rational(na, da), Rational(nb, db));
                    REQUIRE((d == 0 || d == 1));
                }
            }
        }
    }
}

TEST_CASE("rational parsing and formatting") {
    CHECK(q("5/2") == Rational(5, 2));
    CHECK(q("-5/2") == Rational(-5, 2));
    CHECK(q("+3") == Rational(3));
    CHECK(q("6/4") == Rational(3, 2));  // canonical form
    CHECK(format_rational(q("6/4")) == "3/2");
    CHECK(format_rational(q("-8/2")) == "-4");
    CHECK(format_rational(q("0/7")) == "0");
    CHECK_THROWS_AS(q("2.5"), std::invalid_argument);
    CHECK_THROWS_AS(q("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(q("abc"), std::invalid_argument);
    CHECK_THROWS_AS(q(""), std::invalid_argument);
    CHECK_THROWS_AS(q("1/ 2"), std::invalid_argument);
}

TEST_CASE("round trip format/parse") {
    SplitMix64 rng(103);
    for (int t = 0; t < 2000; ++t) {
        const Rational v = testutil::random_rational(rng, 64, 20);
        CHECK(parse_rational(format_rational(v)) == v);
    }
}

TEST_CASE("extended integers") {
    const ExtInt inf = ExtInt::inf();
    CHECK(inf == ExtInt::inf());
    CHECK(ExtInt(3) < inf);
    CHECK(!(inf < ExtInt(3)));
    CHECK(!(inf < inf));
    CHECK(min(ExtInt(2), inf) == ExtInt(2));
    CHECK(min(inf, inf) == inf);
    CHECK((inf + ExtInt(5)) == inf);
    CHECK((inf - 1) == inf);
    CHECK((ExtInt(2) + ExtInt(3)) == ExtInt(5));
    CHECK((ExtInt(2) - 5) == ExtInt(-3));
    CHECK_THROWS_AS(inf.value(), std::domain_error);

    CHECK(q("100") < inf);
    CHECK(Int(7) < inf);
    CHECK(Int(7) <= ExtInt(7));
    CHECK(!(Int(7) == inf));

    CHECK(format_extint(inf) == "inf");
    CHECK(format_extint(ExtInt(-4)) == "-4");
    CHECK(parse_extint("inf") == inf);
    CHECK(parse_extint("-12") == ExtInt(-12));
    CHECK_THROWS_AS(parse_extint("x"), std::invalid_argument);
}
