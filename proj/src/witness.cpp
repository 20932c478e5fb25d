#include "stabregion/witness.hpp"

namespace stabreg {

std::string to_string(CaseTag c) {
    switch (c) {
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
        case CaseTag::IV: return "IV";
    }
    return "?";
}

namespace {

void require_theta1(const Bounds& b, const Point& x, const char* who) {
    if (!theta1_contains(b, x)) {
        throw std::invalid_argument(std::string(who) + ": point is outside the base region");
    }
}

struct Prescription {
    bool found = false;
    int c1 = 0, c2 = 0, c3 = 0;  // 0 = floor, 1 = floor+1
    std::string branch = "none";
};

// The per-case shift tables. Each case dispatches on the relation profile
// and a handful of floor conditions; the first matching branch wins. A
// branch can prescribe a shift that fails validation on some inputs; the
// caller validates and falls back to the exhaustive search.
Prescription prescribe(const Bounds& b, const FloorData& d, CaseTag c) {
    const auto& k = b.k;
    Prescription p;
    const auto take = [&](int c1, int c2, int c3, const char* id) {
        p.found = true;
        p.c1 = c1;
        p.c2 = c2;
        p.c3 = c3;
        p.branch = id;
    };

    switch (c) {
        case CaseTag::I:
            take(0, 0, 0, "I");
            break;

        case CaseTag::II:
            if (d.a23 == 0) take(0, 0, 0, "II.1");
            else if (d.m23 <= k.k23 - 2) take(0, 0, 0, "II.2i");
            else if (d.a12 == 0 && !d.int12) take(0, 1, 0, "II.2ii");
            break;

        case CaseTag::III:
            if (d.a13 == 0) {
                if (d.a12 == 0) take(0, 0, 0, "III.1i");
                else if (d.m12 <= k.k12 - 2) take(0, 0, 0, "III.1ii");
                else if (d.a23 == 0 && !d.int23 && Int(d.a[3] + 1) <= b.K03 - 1)
                    take(1, 0, 1, "III.1iii");
            } else {
                if (d.a12 == 0 && !d.int13 && d.m13 <= b.K13 - 2) take(0, 0, 0, "III.2i");
                else if (d.a12 == 1) take(1, 0, 0, "III.2ii");
            }
            break;

        case CaseTag::IV: {
            const int a12 = d.a12, a13 = d.a13, a23 = d.a23;
            if (a12 == 0 && a13 == 0 && a23 == 0) take(0, 0, 0, "IV.a");
            else if (a12 == 0 && a13 == 1 && a23 == 1) take(1, 1, 0, "IV.b");
            else if (a12 == 1 && a13 == 1 && a23 == 0) take(1, 0, 0, "IV.c");
            else if (a12 == 1 && a13 == 0 && a23 == 0) {
                if (d.m23 <= k.k23 - 2 && !d.int23 && d.a[3] <= b.K03 - 2)
                    take(1, 0, 1, "IV.d.i");
                else if (d.m12 <= k.k12 - 2) take(0, 0, 0, "IV.d.ii");
            } else if (a12 == 0 && a13 == 0 && a23 == 1) {
                if (d.m23 <= k.k23 - 2) take(0, 0, 0, "IV.e.i");
                else if (!d.int12 && d.m12 <= k.k12 - 2) take(0, 1, 0, "IV.e.ii");
            } else if (a12 == 1 && a13 == 1 && a23 == 1) {
                if (d.m23 <= k.k23 - 2) take(1, 0, 0, "IV.f.i");
                else if (d.m12 <= k.k12 - 2) take(1, 1, 0, "IV.f.ii");
            }
            break;
        }
    }
    return p;
}

}  // namespace

CaseTag case_of(const Bounds& b, const Point& x) {
    require_theta1(b, x, "case_of");
    const FloorData d = floor_data(x);
    const bool eq1 = (d.a[1] == b.k.k01 - 1);
    const bool eq2 = (d.a[2] == b.K02 - 1);
    if (eq1 && eq2) return CaseTag::I;
    if (eq1) return CaseTag::II;
    if (eq2) return CaseTag::III;
    return CaseTag::IV;
}

bool verify_witness(const Bounds& b, const Point& x, const Witness& w) {
    if (w.shift.p0 != 0) return false;
    if (!(shifted(x, w.shift) == w.z)) return false;
    return a0_contains(b, w.shift) && s3_contains(w.z);
}

WitnessResult construct_witness(const Bounds& b, const Point& x) {
    require_theta1(b, x, "construct_witness");
    const FloorData d = floor_data(x);

    WitnessResult res;
    res.case_tag = case_of(b, x);

    const Prescription p = prescribe(b, d, res.case_tag);
    res.branch = p.branch;
    if (p.found) {
        ShiftVector shift{0, d.a[1] + p.c1, d.a[2] + p.c2, d.a[3] + p.c3};
        Witness w{shift, shifted(x, shift)};
        if (verify_witness(b, x, w)) {
            res.witness = std::move(w);
            return res;
        }
        res.fallback = true;  // prescribed shift failed validation
    } else {
        res.fallback = true;  // no branch applied
    }

    if (auto w = theta2_contains(b, x)) {
        res.witness = std::move(w);
        return res;
    }
    res.delta = delta_membership(b, x);
    return res;
}

RegionVerdict classify(const Bounds& b, const Point& x) {
    RegionVerdict v;
    v.violations = theta1_violations(b, x);
    if (!v.violations.empty()) {
        v.kind = RegionVerdict::Kind::NotInTheta1;
        return v;
    }
    v.labels = delta_membership(b, x);
    if (!v.labels.empty()) {
        v.kind = RegionVerdict::Kind::InDelta;
        return v;
    }
    WitnessResult w = construct_witness(b, x);
    v.case_tag = w.case_tag;
    v.branch = w.branch;
    v.fallback = w.fallback;
    if (w.witness) {
        v.kind = RegionVerdict::Kind::InTheta2;
        v.witness = std::move(w.witness);
    } else {
        v.kind = RegionVerdict::Kind::NoWitness;
    }
    return v;
}

}  // namespace stabreg
