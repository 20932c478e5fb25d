#pragma once

#include "stabregion/delta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stabreg {

// The four-way split of the base region on two floor equalities:
//   I:   floor(x0-x1) = k01-1  and  floor(x0-x2) = K02-1
//   II:  floor(x0-x1) = k01-1  and  floor(x0-x2) < K02-1
//   III: floor(x0-x1) < k01-1  and  floor(x0-x2) = K02-1
//   IV:  floor(x0-x1) < k01-1  and  floor(x0-x2) < K02-1
// Inside the region the floors never exceed the bounds, so the split is
// exhaustive. With an infinite bound the "=" side is unreachable.
enum class CaseTag { I, II, III, IV };

std::string to_string(CaseTag c);

// Requires x ∈ Θ1.
CaseTag case_of(const Bounds& b, const Point& x);

// Result of the constructive search. When `witness` is empty, `delta` holds
// the strata containing x (the reason there is no witness, when the strata
// tables account for it; an empty list here means the tables do not cover
// the point even though the exhaustive search found nothing).
struct WitnessResult {
    std::optional<Witness> witness;
    CaseTag case_tag = CaseTag::IV;
    std::string branch;   // branch id within the case, or "none"
    bool fallback = false;  // prescribed shift failed validation or no branch
    std::vector<DeltaLabel> delta;
};

// Follows the per-case branch table to pick the prescribed shift (floors or
// selected offsets per coordinate), validates it, and falls back to the
// exhaustive candidate search when the table prescribes nothing workable.
// Requires x ∈ Θ1.
WitnessResult construct_witness(const Bounds& b, const Point& x);

// w is a valid witness for x: p0 = 0, z = x + p, the shift is admissible,
// and z ∈ S^3(-1,1).
bool verify_witness(const Bounds& b, const Point& x, const Witness& w);

struct RegionVerdict {
    enum class Kind {
        NotInTheta1,
        InDelta,
        InTheta2,
        // Inside Θ1, no stratum matched, and the exhaustive search still
        // found no witness. The strata tables do not account for such
        // points; they are reported rather than silently misfiled.
        NoWitness,
    };
    Kind kind = Kind::NotInTheta1;
    std::vector<std::string> violations;   // NotInTheta1
    std::vector<DeltaLabel> labels;        // InDelta
    std::optional<Witness> witness;        // InTheta2
    CaseTag case_tag = CaseTag::IV;        // InTheta2 / NoWitness
    std::string branch;
    bool fallback = false;
};

// Total classification: outside / in a stratum / witnessed, in that order.
RegionVerdict classify(const Bounds& b, const Point& x);

}  // namespace stabreg
