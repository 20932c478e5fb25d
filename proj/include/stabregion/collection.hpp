#pragma once

#include "stabregion/extint.hpp"
#include "stabregion/rational.hpp"

#include <array>

namespace stabreg {

// The six minimal hom degrees k_ij (i < j) of a length-4 exceptional
// collection. +inf marks an empty hom space; that case is an extension of
// the classified situation and is flagged as such in reports.
struct HomDegrees {
    ExtInt k01, k02, k03, k12, k13, k23;

    bool all_finite() const {
        return k01.finite() && k02.finite() && k03.finite() && k12.finite() &&
               k13.finite() && k23.finite();
    }
};

// Hom degrees plus the composite bounds
//   K02 = min{k02, k01+k12-1}
//   K13 = min{k13, k12+k23-1}
//   K03 = min{k01+k12+k23-2, k01+k13-1, k02+k23-1, k03}
struct Bounds {
    HomDegrees k;
    ExtInt K02, K13, K03;
};

Bounds derive_bounds(const HomDegrees& k);

// (O, O(1,0), O(0,1), O(1,1)) on the quadric surface: every k_ij = 0.
HomDegrees preset_quadric();

// Integer shift vector (p0, p1, p2, p3). The normalization p0 = 0 is used
// throughout; operations reject anything else.
struct ShiftVector {
    Int p0 = 0, p1 = 0, p2 = 0, p3 = 0;

    friend bool operator==(const ShiftVector& a, const ShiftVector& b) {
        return a.p0 == b.p0 && a.p1 == b.p1 && a.p2 == b.p2 && a.p3 == b.p3;
    }
};

// Admissibility of a shift: the six inequalities
//   p1 <= k01-1,  p2 <= K02-1,  p3 <= K03-1,
//   p2-p1 <= k12-1,  p3-p2 <= k23-1,  p3-p1 <= K13-1,
// each vacuous against +inf. Throws std::invalid_argument if p.p0 != 0.
bool a0_contains(const Bounds& b, const ShiftVector& p);

// Phase 4-tuple. x0 plays the role of the reference coordinate in every
// floor relation below.
struct Point {
    Rational x0, x1, x2, x3;

    const Rational& operator[](int i) const {
        switch (i) {
            case 0: return x0;
            case 1: return x1;
            case 2: return x2;
            default: return x3;
        }
    }

    friend bool operator==(const Point& a, const Point& b) {
        return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
    }
};

Point shifted(const Point& x, const ShiftVector& p);

// One point of the full parameter space: four positive masses times a
// phase tuple. Masses act as a trivial product factor; only the phases are
// classified.
struct StabilityCoordinates {
    std::array<Rational, 4> masses;
    Point phases;

    StabilityCoordinates(std::array<Rational, 4> m, Point x);
};

}  // namespace stabreg
