#pragma once

#include "stabregion/regions.hpp"
#include "stabregion/relations.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stabreg {

// Strata of the excluded set. D1..D5 are the merged strata; DII..DIV_3 are
// the per-case strata from the four-way split on (floor(x0-x1), floor(x0-x2))
// against k01-1 and K02-1. Both families are implemented independently and
// cross-checked by the verification harness.
enum class DeltaLabel {
    D1, D2, D3, D4, D5,
    DII, DIII_1, DIII_2, DIII_3, DIV_1, DIV_2, DIV_3,
};

bool is_merged_label(DeltaLabel l);  // D1..D5
std::string to_string(DeltaLabel l);  // "D1".."D5", "DII", "DIII.1".."DIV.3"
DeltaLabel parse_delta_label(const std::string& s);
const std::vector<DeltaLabel>& all_delta_labels();

// Merged strata containing x. Requires x ∈ Θ1 (throws otherwise: the strata
// are subsets of Θ1 by definition, so classifying anything else is an error).
std::vector<DeltaLabel> delta_membership(const Bounds& b, const Point& x);

// Per-case strata containing x. Same Θ1 precondition.
std::vector<DeltaLabel> case_delta_membership(const Bounds& b, const Point& x);

struct StratumSample {
    enum class Status {
        found,       // point is in the stratum, self-verified
        infeasible,  // constraint propagation proved the stratum empty
        exhausted,   // no structural contradiction, but the budget ran out
    };
    Status status = Status::exhausted;
    std::optional<Point> point;
    int attempts = 0;
};

// Constructive sampler for a single stratum. The strata have measure zero,
// so this solves the defining equalities (integer floor targets, forced
// integral differences, relation-compatible fractional parts) instead of
// rejection sampling. Deterministic for fixed (b, label, seed).
StratumSample sample_on_stratum(const Bounds& b, DeltaLabel label, std::uint64_t seed);

}  // namespace stabreg
