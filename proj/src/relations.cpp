#include "stabregion/relations.hpp"

namespace stabreg {

namespace {

void check_pair(int i, int j, int lo) {
    if (i < lo || j > 3 || i >= j) {
        throw std::invalid_argument("relation pair indices must satisfy " +
                                    std::to_string(lo) + " <= i < j <= 3");
    }
}

}  // namespace

int relation_alpha(const Point& x, int i, int j) {
    check_pair(i, j, 1);
    const Int lhs = floor(x.x0 - x[j]) - floor(x.x0 - x[i]);
    const Int base = floor(x[i] - x[j]);
    const Int alpha = lhs - base;
    // 0 or 1 by the floor sum inequality; anything else is a library bug.
    if (alpha != 0 && alpha != 1) throw std::logic_error("relation_alpha out of {0,1}");
    return alpha.convert_to<int>();
}

RelationProfile relation_profile(const Point& x) {
    return RelationProfile{relation_alpha(x, 1, 2), relation_alpha(x, 1, 3),
                           relation_alpha(x, 2, 3)};
}

bool is_integral_difference(const Point& x, int i, int j) {
    check_pair(i, j, 0);
    return is_integer(x[i] - x[j]);
}

FloorData floor_data(const Point& x) {
    FloorData d;
    d.a[0] = 0;
    d.a[1] = floor(x.x0 - x.x1);
    d.a[2] = floor(x.x0 - x.x2);
    d.a[3] = floor(x.x0 - x.x3);
    d.m12 = floor(x.x1 - x.x2);
    d.m13 = floor(x.x1 - x.x3);
    d.m23 = floor(x.x2 - x.x3);
    d.a12 = Int(d.a[2] - d.a[1] - d.m12).convert_to<int>();
    d.a13 = Int(d.a[3] - d.a[1] - d.m13).convert_to<int>();
    d.a23 = Int(d.a[3] - d.a[2] - d.m23).convert_to<int>();
    d.int12 = is_integer(x.x1 - x.x2);
    d.int13 = is_integer(x.x1 - x.x3);
    d.int23 = is_integer(x.x2 - x.x3);
    return d;
}

}  // namespace stabreg
