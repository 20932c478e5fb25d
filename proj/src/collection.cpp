#include "stabregion/collection.hpp"

namespace stabreg {

Bounds derive_bounds(const HomDegrees& k) {
    Bounds b;
    b.k = k;
    b.K02 = min(k.k02, k.k01 + k.k12 - 1);
    b.K13 = min(k.k13, k.k12 + k.k23 - 1);
    b.K03 = min(min(k.k01 + k.k12 + k.k23 - 2, k.k01 + k.k13 - 1),
                min(k.k02 + k.k23 - 1, k.k03));
    return b;
}

HomDegrees preset_quadric() {
    HomDegrees k;
    k.k01 = k.k02 = k.k03 = k.k12 = k.k13 = k.k23 = ExtInt(0);
    return k;
}

bool a0_contains(const Bounds& b, const ShiftVector& p) {
    if (p.p0 != 0) {
        throw std::invalid_argument("a0_contains: shift vector must have p0 = 0");
    }
    return p.p1 <= b.k.k01 - 1 && p.p2 <= b.K02 - 1 && p.p3 <= b.K03 - 1 &&
           Int(p.p2 - p.p1) <= b.k.k12 - 1 && Int(p.p3 - p.p2) <= b.k.k23 - 1 &&
           Int(p.p3 - p.p1) <= b.K13 - 1;
}

Point shifted(const Point& x, const ShiftVector& p) {
    return Point{x.x0 + Rational(p.p0), x.x1 + Rational(p.p1), x.x2 + Rational(p.p2),
                 x.x3 + Rational(p.p3)};
}

StabilityCoordinates::StabilityCoordinates(std::array<Rational, 4> m, Point x)
    : masses(std::move(m)), phases(std::move(x)) {
    for (const auto& mass : masses) {
        if (mass <= 0) throw std::invalid_argument("StabilityCoordinates: masses must be > 0");
    }
}

}  // namespace stabreg
