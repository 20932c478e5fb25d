#pragma once

#include "stabregion/collection.hpp"

#include <array>

namespace stabreg {

// For 1 <= i < j <= 3 and a phase tuple x, exactly one alpha in {0,1}
// satisfies
//   floor(x0-xj) - floor(x0-xi) = floor(xi-xj) + alpha.
// Equivalently alpha = 1 iff frac(x0-xi) > frac(x0-xj). The triple
// (a12, a13, a23) can only take six of the eight patterns: (0,1,0) and
// (1,0,1) are impossible.
struct RelationProfile {
    int a12 = 0, a13 = 0, a23 = 0;

    // a13 <= a12 + a23 <= a13 + 1
    bool valid() const { return a13 <= a12 + a23 && a12 + a23 <= a13 + 1; }

    friend bool operator==(const RelationProfile& a, const RelationProfile& b) {
        return a.a12 == b.a12 && a.a13 == b.a13 && a.a23 == b.a23;
    }
};

// The unique alpha for the pair (i, j). Requires 1 <= i < j <= 3.
int relation_alpha(const Point& x, int i, int j);

RelationProfile relation_profile(const Point& x);

// xi - xj ∈ ℤ. Requires 0 <= i < j <= 3.
bool is_integral_difference(const Point& x, int i, int j);

// All floor data of a point that the strata predicates and the witness
// search consume. a[i] = floor(x0-xi), m(i,j) = floor(xi-xj).
struct FloorData {
    std::array<Int, 4> a;   // a[0] = 0 by convention, a[1..3] as above
    Int m12, m13, m23;
    int a12, a13, a23;      // relation profile
    bool int12, int13, int23;  // xi - xj ∈ ℤ for (1,2), (1,3), (2,3)

    RelationProfile profile() const { return RelationProfile{a12, a13, a23}; }
    int alpha(int i, int j) const {
        if (i == 1 && j == 2) return a12;
        if (i == 1 && j == 3) return a13;
        return a23;
    }
};

FloorData floor_data(const Point& x);

}  // namespace stabreg
