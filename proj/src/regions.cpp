#include "stabregion/regions.hpp"

namespace stabreg {

namespace {

struct Inequality {
    const char* name;
    Rational diff;
    ExtInt bound;
};

std::vector<Inequality> theta1_inequalities(const Bounds& b, const Point& x) {
    return {
        {"x0-x1<k01", x.x0 - x.x1, b.k.k01}, {"x1-x2<k12", x.x1 - x.x2, b.k.k12},
        {"x2-x3<k23", x.x2 - x.x3, b.k.k23}, {"x1-x3<K13", x.x1 - x.x3, b.K13},
        {"x0-x3<K03", x.x0 - x.x3, b.K03},   {"x0-x2<K02", x.x0 - x.x2, b.K02},
    };
}

}  // namespace

bool theta1_contains(const Bounds& b, const Point& x) {
    for (const auto& ineq : theta1_inequalities(b, x)) {
        if (!(ineq.diff < ineq.bound)) return false;
    }
    return true;
}

std::vector<std::string> theta1_violations(const Bounds& b, const Point& x) {
    std::vector<std::string> out;
    for (const auto& ineq : theta1_inequalities(b, x)) {
        if (!(ineq.diff < ineq.bound)) out.emplace_back(ineq.name);
    }
    return out;
}

bool s3_contains(const Point& z) {
    const Rational one(1);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const Rational d = z[i] - z[j];
            if (!(-one < d && d < one)) return false;
        }
    }
    return true;
}

std::vector<ShiftVector> candidate_shifts(const Point& x) {
    const Int f1 = floor(x.x0 - x.x1);
    const Int f2 = floor(x.x0 - x.x2);
    const Int f3 = floor(x.x0 - x.x3);
    std::vector<ShiftVector> out;
    out.reserve(8);
    for (int c1 = 0; c1 <= 1; ++c1) {
        for (int c2 = 0; c2 <= 1; ++c2) {
            for (int c3 = 0; c3 <= 1; ++c3) {
                out.push_back(ShiftVector{0, f1 + c1, f2 + c2, f3 + c3});
            }
        }
    }
    return out;
}

std::optional<Witness> theta2_contains(const Bounds& b, const Point& x) {
    for (const ShiftVector& p : candidate_shifts(x)) {
        if (!a0_contains(b, p)) continue;
        Point z = shifted(x, p);
        if (s3_contains(z)) return Witness{p, std::move(z)};
    }
    return std::nullopt;
}

}  // namespace stabreg
