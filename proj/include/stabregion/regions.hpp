#pragma once

#include "stabregion/collection.hpp"

#include <optional>
#include <vector>

namespace stabreg {

// A witness that x lies in the search region: an admissible shift p with
// p0 = 0 together with the shifted point z = x + p, all pairwise
// z-differences strictly inside (-1, 1).
struct Witness {
    ShiftVector shift;
    Point z;
};

// The open region cut out by the six strict inequalities
//   x0-x1 < k01, x1-x2 < k12, x2-x3 < k23,
//   x1-x3 < K13, x0-x3 < K03, x0-x2 < K02.
bool theta1_contains(const Bounds& b, const Point& x);

// Names of the inequalities violated by x, in the order above. Empty iff
// theta1_contains(b, x).
std::vector<std::string> theta1_violations(const Bounds& b, const Point& x);

// All pairwise differences zi - zj, i < j, strictly inside (-1, 1).
bool s3_contains(const Point& z);

// The 8 shift vectors (0, p1, p2, p3) with pi ∈ {floor(x0-xi), floor+1},
// in lexicographically increasing order. Any shift placing every zi = xi+pi
// inside the open window (x0-1, x0+1) is one of these.
std::vector<ShiftVector> candidate_shifts(const Point& x);

// First candidate (lexicographically smallest) that is admissible and puts
// x + p inside S^3(-1,1); empty when none of the 8 works.
std::optional<Witness> theta2_contains(const Bounds& b, const Point& x);

}  // namespace stabreg
