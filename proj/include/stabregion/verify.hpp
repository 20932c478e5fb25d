#pragma once

#include "stabregion/witness.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stabreg {

// How to draw sample points. All modes are deterministic in (strategy, n).
struct SampleStrategy {
    enum class Mode {
        generic,      // independent bounded-denominator rationals
        integrality,  // like generic, but random pairwise differences forced integral
        delta_strata, // constructive stratum samples, round-robin over labels
        grid,         // lattice of step-1/denominator rationals, spread deterministically
    };
    Mode mode = Mode::generic;
    int denominator_bound = 64;
    Rational lo = -4, hi = 4;
    std::uint64_t seed = 1;
};

// Symmetric coordinate range wide enough that every floor equality used by
// the strata (values pinned at k-1 or K-1) is reachable.
std::pair<Rational, Rational> default_range(const Bounds& b);

struct SampleSet {
    std::vector<Point> points;
    std::size_t shortfall = 0;  // delta_strata mode may under-deliver
};

SampleSet sample_points(const Bounds& b, const SampleStrategy& s, std::size_t n);

// Uniform hom degrees in [-3, 5], for fuzzing whole collections.
HomDegrees random_collection(std::uint64_t seed);

struct Mismatch {
    std::size_t index = 0;
    Point x;
    // "witness-missing": in the base region, no stratum matched, and the
    //   exhaustive search found no admissible shift.
    // "witness-in-delta": a stratum matched but a witness exists anyway.
    // "triple-law": relation profile (0,1,0) or (1,0,1).
    // "range": shifted difference outside [0,1) resp. (-1,0).
    // "decomposition": merged and per-case stratum emptiness disagree.
    std::string kind;
    std::vector<DeltaLabel> merged;
    std::vector<DeltaLabel> per_case;
    bool witness_found = false;
    RelationProfile profile;
    std::uint64_t seed = 0;  // strategy seed; (seed, index) replays the draw
};

struct Report {
    std::string check;
    std::size_t n_points = 0;
    std::size_t shortfall = 0;
    std::size_t outside = 0;      // not in the base region
    std::size_t in_delta = 0;     // some stratum matched, no witness
    std::size_t witnessed = 0;    // witness found, no stratum
    std::size_t unaccounted = 0;  // no stratum and no witness
    std::size_t prescribed_ok = 0;  // witnesses straight from the branch table
    std::size_t fallbacks = 0;      // witnesses that needed the exhaustive search
    std::vector<Mismatch> mismatches;
    long long elapsed_ms = 0;

    bool pass() const { return mismatches.empty(); }
};

// Certifies the set identity on the given points: inside the base region,
// "no stratum matches" must coincide with "the exhaustive candidate search
// finds a witness". Also measures how often the constructive branch table
// agreed with the search.
Report check_theorem(const Bounds& b, const std::vector<Point>& points,
                     std::uint64_t seed = 0);

// No point may realize the impossible relation profiles (0,1,0) or (1,0,1).
Report check_triple_law(const std::vector<Point>& points, std::uint64_t seed = 0);

// The shifted differences (xi + floor(x0-xi)) - (xj + floor(x0-xj)) must lie
// in [0,1) when the pair exponent is 0 and in (-1,0) when it is 1.
Report check_shift_ranges(const std::vector<Point>& points, std::uint64_t seed = 0);

// Merged-strata emptiness and per-case-strata emptiness must agree on every
// point of the base region.
Report check_delta_decomposition(const Bounds& b, const std::vector<Point>& points,
                                 std::uint64_t seed = 0);

}  // namespace stabreg
