#include "stabregion/delta.hpp"

#include "stabregion/rng.hpp"

#include <algorithm>
#include <array>

namespace stabreg {

bool is_merged_label(DeltaLabel l) {
    switch (l) {
        case DeltaLabel::D1:
        case DeltaLabel::D2:
        case DeltaLabel::D3:
        case DeltaLabel::D4:
        case DeltaLabel::D5: return true;
        default: return false;
    }
}

std::string to_string(DeltaLabel l) {
    switch (l) {
        case DeltaLabel::D1: return "D1";
        case DeltaLabel::D2: return "D2";
        case DeltaLabel::D3: return "D3";
        case DeltaLabel::D4: return "D4";
        case DeltaLabel::D5: return "D5";
        case DeltaLabel::DII: return "DII";
        case DeltaLabel::DIII_1: return "DIII.1";
        case DeltaLabel::DIII_2: return "DIII.2";
        case DeltaLabel::DIII_3: return "DIII.3";
        case DeltaLabel::DIV_1: return "DIV.1";
        case DeltaLabel::DIV_2: return "DIV.2";
        case DeltaLabel::DIV_3: return "DIV.3";
    }
    return "?";
}

DeltaLabel parse_delta_label(const std::string& s) {
    for (DeltaLabel l : all_delta_labels()) {
        if (to_string(l) == s) return l;
    }
    throw std::invalid_argument("unknown stratum label: '" + s + "'");
}

const std::vector<DeltaLabel>& all_delta_labels() {
    static const std::vector<DeltaLabel> labels = {
        DeltaLabel::D1,     DeltaLabel::D2,     DeltaLabel::D3,     DeltaLabel::D4,
        DeltaLabel::D5,     DeltaLabel::DII,    DeltaLabel::DIII_1, DeltaLabel::DIII_2,
        DeltaLabel::DIII_3, DeltaLabel::DIV_1,  DeltaLabel::DIV_2,  DeltaLabel::DIV_3,
    };
    return labels;
}

namespace {

void require_theta1(const Bounds& b, const Point& x, const char* who) {
    if (!theta1_contains(b, x)) {
        throw std::invalid_argument(std::string(who) + ": point is outside the base region");
    }
}

bool in_stratum(const Bounds& b, const FloorData& d, DeltaLabel l) {
    const auto& k = b.k;
    switch (l) {
        case DeltaLabel::D1:
            return d.a23 == 1 && d.a13 == 1 && d.a[1] == k.k01 - 1 && d.a[2] < b.K02 - 1 &&
                   d.m23 == k.k23 - 1 && d.int12;
        case DeltaLabel::D2:
            return d.a23 == 1 && d.a13 == 0 && d.a[2] < b.K02 - 1 && d.m23 == k.k23 - 1 &&
                   d.int12;
        case DeltaLabel::D3:
            return d.a12 == 1 && d.a13 == 0 && d.a[1] < k.k01 - 1 && d.m12 == k.k12 - 1 &&
                   d.int23;
        case DeltaLabel::D4:
            return d.a12 == 1 && d.a13 == 0 && d.a[1] < k.k01 - 1 && d.m12 == k.k12 - 1 &&
                   d.a[3] == b.K03 - 1;
        case DeltaLabel::D5:
            return d.a12 == 0 && d.a13 == 1 && d.m13 == b.K13 - 1 && d.a[1] < k.k01 - 1 &&
                   d.a[2] == b.K02 - 1;
        case DeltaLabel::DII:
            return d.a23 == 1 && d.a[1] == k.k01 - 1 && d.a[2] < b.K02 - 1 &&
                   d.m23 == k.k23 - 1 && d.int12;
        case DeltaLabel::DIII_1:
            return d.a12 == 1 && d.a13 == 0 && d.a[1] < k.k01 - 1 && d.a[2] == b.K02 - 1 &&
                   d.m12 == k.k12 - 1 && d.int23;
        case DeltaLabel::DIII_2:
            return d.a12 == 1 && d.a13 == 0 && d.a[1] < k.k01 - 1 && d.a[2] == b.K02 - 1 &&
                   d.m12 == k.k12 - 1 && d.a[3] == b.K03 - 1;
        case DeltaLabel::DIII_3:
            return d.a12 == 0 && d.a13 == 1 && d.m13 == b.K13 - 1 && d.a[1] < k.k01 - 1 &&
                   d.a[2] == b.K02 - 1;
        case DeltaLabel::DIV_1:
            return d.a12 == 1 && d.a13 == 0 && d.a23 == 0 && d.a[1] < k.k01 - 1 &&
                   d.a[2] < b.K02 - 1 && d.m12 == k.k12 - 1 && d.int23;
        case DeltaLabel::DIV_2:
            return d.a12 == 1 && d.a13 == 0 && d.a23 == 0 && d.a[1] < k.k01 - 1 &&
                   d.a[2] < b.K02 - 1 && d.m12 == k.k12 - 1 && d.a[3] == b.K03 - 1;
        case DeltaLabel::DIV_3:
            return d.a12 == 0 && d.a13 == 0 && d.a23 == 1 && d.a[1] < k.k01 - 1 &&
                   d.a[2] < b.K02 - 1 && d.int12 && d.m23 == k.k23 - 1;
    }
    return false;
}

}  // namespace

std::vector<DeltaLabel> delta_membership(const Bounds& b, const Point& x) {
    require_theta1(b, x, "delta_membership");
    const FloorData d = floor_data(x);
    std::vector<DeltaLabel> out;
    for (DeltaLabel l : all_delta_labels()) {
        if (is_merged_label(l) && in_stratum(b, d, l)) out.push_back(l);
    }
    return out;
}

std::vector<DeltaLabel> case_delta_membership(const Bounds& b, const Point& x) {
    require_theta1(b, x, "case_delta_membership");
    const FloorData d = floor_data(x);
    std::vector<DeltaLabel> out;
    for (DeltaLabel l : all_delta_labels()) {
        if (!is_merged_label(l) && in_stratum(b, d, l)) out.push_back(l);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Constrained sampler.
//
// A point is rebuilt from (a1, a2, a3; f1, f2, f3; x0) via
// xi = x0 - ai - fi with fi ∈ [0, 1). Then floor(x0-xi) = ai, the relation
// exponent for (i, j) is [fi > fj], floor(xi-xj) = (aj - ai) - [fi > fj],
// and xi - xj ∈ ℤ iff fi = fj. Every stratum is a conjunction of
//   - fixed relation exponents,
//   - forced fractional-part equalities,
//   - integer equalities / upper bounds on the ai and the pair floors,
// so sampling means: pick a consistent relation profile, solve the integer
// side as a difference-bound system, and realize the fractional order.
// ---------------------------------------------------------------------------

namespace {

struct IntCon {
    enum Var { A1, A2, A3, M12, M13, M23 };
    enum Rel { Eq, Le };
    Var var;
    Rel rel;
    ExtInt rhs;
};

struct StratumSpec {
    int req12 = -1, req13 = -1, req23 = -1;  // -1 free, else forced exponent
    bool eq12 = false, eq23 = false;         // forced fi = fj
    std::vector<IntCon> cons;
};

StratumSpec stratum_spec(const Bounds& b, DeltaLabel l) {
    using V = IntCon::Var;
    using R = IntCon::Rel;
    const auto& k = b.k;
    StratumSpec s;
    switch (l) {
        case DeltaLabel::D1:
            s.req13 = 1; s.req23 = 1; s.eq12 = true;
            s.cons = {{V::A1, R::Eq, k.k01 - 1}, {V::A2, R::Le, b.K02 - 2},
                      {V::M23, R::Eq, k.k23 - 1}};
            break;
        case DeltaLabel::D2:
            s.req13 = 0; s.req23 = 1; s.eq12 = true;
            s.cons = {{V::A2, R::Le, b.K02 - 2}, {V::M23, R::Eq, k.k23 - 1}};
            break;
        case DeltaLabel::D3:
            s.req12 = 1; s.req13 = 0; s.eq23 = true;
            s.cons = {{V::A1, R::Le, k.k01 - 2}, {V::M12, R::Eq, k.k12 - 1}};
            break;
        case DeltaLabel::D4:
            s.req12 = 1; s.req13 = 0;
            s.cons = {{V::A1, R::Le, k.k01 - 2}, {V::M12, R::Eq, k.k12 - 1},
                      {V::A3, R::Eq, b.K03 - 1}};
            break;
        case DeltaLabel::D5:
            s.req12 = 0; s.req13 = 1;
            s.cons = {{V::M13, R::Eq, b.K13 - 1}, {V::A1, R::Le, k.k01 - 2},
                      {V::A2, R::Eq, b.K02 - 1}};
            break;
        case DeltaLabel::DII:
            s.req23 = 1; s.eq12 = true;
            s.cons = {{V::A1, R::Eq, k.k01 - 1}, {V::A2, R::Le, b.K02 - 2},
                      {V::M23, R::Eq, k.k23 - 1}};
            break;
        case DeltaLabel::DIII_1:
            s.req12 = 1; s.req13 = 0; s.eq23 = true;
            s.cons = {{V::A1, R::Le, k.k01 - 2}, {V::A2, R::Eq, b.K02 - 1},
                      {V::M12, R::Eq, k.k12 - 1}};
            break;
        case DeltaLabel::DIII_2:
            s.req12 = 1; s.req13 = 0;
            s.cons = {{V::A1, R::Le, k.k01 - 2}, {V::A2, R::Eq, b.K02 - 1},
                      {V::M12, R::Eq, k.k12 - 1}, {V::A3, R::Eq, b.K03 - 1}};
            break;
        case DeltaLabel::DIII_3:
            s.req12 = 0; s.req13 = 1;
            s.cons = {{V::M13, R::Eq, b.K13 - 1}, {V::A1, R::Le, k.k01 - 2},
                      {V::A2, R::Eq, b.K02 - 1}};
            break;
        case DeltaLabel::DIV_1:
            s.req12 = 1; s.req13 = 0; s.req23 = 0; s.eq23 = true;
            s.cons = {{V::A1, R::Le, k.k01 - 2}, {V::A2, R::Le, b.K02 - 2},
                      {V::M12, R::Eq, k.k12 - 1}};
            break;
        case DeltaLabel::DIV_2:
            s.req12 = 1; s.req13 = 0; s.req23 = 0;
            s.cons = {{V::A1, R::Le, k.k01 - 2}, {V::A2, R::Le, b.K02 - 2},
                      {V::M12, R::Eq, k.k12 - 1}, {V::A3, R::Eq, b.K03 - 1}};
            break;
        case DeltaLabel::DIV_3:
            s.req12 = 0; s.req13 = 0; s.req23 = 1; s.eq12 = true;
            s.cons = {{V::A1, R::Le, k.k01 - 2}, {V::A2, R::Le, b.K02 - 2},
                      {V::M23, R::Eq, k.k23 - 1}};
            break;
    }
    return s;
}

struct Profile {
    int a12, a13, a23;
};

const std::array<Profile, 6> kValidProfiles = {{
    {0, 0, 0}, {1, 1, 0}, {1, 0, 0}, {0, 0, 1}, {1, 1, 1}, {0, 1, 1},
}};

bool profile_matches(const Profile& p, const StratumSpec& s) {
    if (s.req12 >= 0 && p.a12 != s.req12) return false;
    if (s.req13 >= 0 && p.a13 != s.req13) return false;
    if (s.req23 >= 0 && p.a23 != s.req23) return false;
    // fi = fj forces the pair exponent to 0 and equalizes the exponents of
    // the two pairs through the third index.
    if (s.eq12 && (p.a12 != 0 || p.a13 != p.a23)) return false;
    if (s.eq23 && (p.a23 != 0 || p.a12 != p.a13)) return false;
    return true;
}

// Difference-bound system on nodes {0 = const, 1..3 = a1..a3};
// edge u -> v with weight w means a_v - a_u <= w.
struct DiffBounds {
    static constexpr int N = 4;
    std::array<std::array<std::optional<Int>, N>, N> dist;

    DiffBounds() {
        for (int i = 0; i < N; ++i) dist[i][i] = Int(0);
    }

    void add(int u, int v, const Int& w) {
        if (!dist[u][v] || w < *dist[u][v]) dist[u][v] = w;
    }

    // Floyd-Warshall closure; false on a negative cycle (infeasible).
    bool close() {
        for (int m = 0; m < N; ++m) {
            for (int u = 0; u < N; ++u) {
                for (int v = 0; v < N; ++v) {
                    if (dist[u][m] && dist[m][v]) {
                        Int w = *dist[u][m] + *dist[m][v];
                        if (!dist[u][v] || w < *dist[u][v]) dist[u][v] = w;
                    }
                }
            }
            for (int i = 0; i < N; ++i) {
                if (dist[i][i] && *dist[i][i] < 0) return false;
            }
        }
        return true;
    }
};

}  // namespace

StratumSample sample_on_stratum(const Bounds& b, DeltaLabel label, std::uint64_t seed) {
    StratumSample result;
    const StratumSpec spec = stratum_spec(b, label);

    // An equality against an infinite bound can never hold.
    for (const IntCon& c : spec.cons) {
        if (c.rel == IntCon::Eq && !c.rhs.finite()) {
            result.status = StratumSample::Status::infeasible;
            return result;
        }
    }

    std::vector<Profile> profiles;
    for (const Profile& p : kValidProfiles) {
        if (profile_matches(p, spec)) profiles.push_back(p);
    }
    if (profiles.empty()) {
        result.status = StratumSample::Status::infeasible;
        return result;
    }

    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(label));
    bool any_integer_feasible = false;

    constexpr int kAttempts = 64;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        result.attempts = attempt + 1;
        const Profile prof = profiles[rng.below(profiles.size())];

        DiffBounds db;
        // Base-region bounds, translated through the chosen profile:
        // ai <= Bi - 1 and (aj - ai) <= (k-1) + alpha_ij.
        const auto add_unary_le = [&](int node, const ExtInt& bound) {
            if (bound.finite()) db.add(0, node, bound.value());
        };
        const auto add_unary_eq = [&](int node, const Int& v) {
            db.add(0, node, v);
            db.add(node, 0, -v);
        };
        const auto add_pair = [&](int ni, int nj, const IntCon::Rel rel, const Int& rhs,
                                  int alpha) {
            // floor(xi-xj) rel rhs  <=>  (a_j - a_i) rel rhs + alpha
            db.add(ni, nj, rhs + alpha);
            if (rel == IntCon::Eq) db.add(nj, ni, -(rhs + alpha));
        };

        add_unary_le(1, b.k.k01 - 1);
        add_unary_le(2, b.K02 - 1);
        add_unary_le(3, b.K03 - 1);
        if ((b.k.k12 - 1).finite()) add_pair(1, 2, IntCon::Le, (b.k.k12 - 1).value(), prof.a12);
        if ((b.K13 - 1).finite()) add_pair(1, 3, IntCon::Le, (b.K13 - 1).value(), prof.a13);
        if ((b.k.k23 - 1).finite()) add_pair(2, 3, IntCon::Le, (b.k.k23 - 1).value(), prof.a23);

        for (const IntCon& c : spec.cons) {
            switch (c.var) {
                case IntCon::A1:
                    if (c.rel == IntCon::Eq) add_unary_eq(1, c.rhs.value());
                    else add_unary_le(1, c.rhs);
                    break;
                case IntCon::A2:
                    if (c.rel == IntCon::Eq) add_unary_eq(2, c.rhs.value());
                    else add_unary_le(2, c.rhs);
                    break;
                case IntCon::A3:
                    if (c.rel == IntCon::Eq) add_unary_eq(3, c.rhs.value());
                    else add_unary_le(3, c.rhs);
                    break;
                case IntCon::M12: add_pair(1, 2, c.rel, c.rhs.value(), prof.a12); break;
                case IntCon::M13: add_pair(1, 3, c.rel, c.rhs.value(), prof.a13); break;
                case IntCon::M23: add_pair(2, 3, c.rel, c.rhs.value(), prof.a23); break;
            }
        }

        if (!db.close()) continue;  // this profile has no integer solution
        any_integer_feasible = true;

        // Assign a1, a2, a3 sequentially inside the closed system.
        constexpr int kWidth = 5;
        std::array<std::optional<Int>, 4> val;
        val[0] = Int(0);
        bool ok = true;
        for (int node = 1; node <= 3 && ok; ++node) {
            std::optional<Int> upper, lower;
            for (int q = 0; q < 4; ++q) {
                if (!val[q]) continue;
                if (db.dist[q][node]) {
                    Int u = *val[q] + *db.dist[q][node];
                    if (!upper || u < *upper) upper = u;
                }
                if (db.dist[node][q]) {
                    Int l = *val[q] - *db.dist[node][q];
                    if (!lower || l > *lower) lower = l;
                }
            }
            if (upper && lower && *lower > *upper) { ok = false; break; }
            Int choice;
            if (upper) {
                Int lo = lower ? *lower : *upper - kWidth;
                Int span = *upper - lo;
                if (span > kWidth) { lo = *upper - kWidth; span = Int(kWidth); }
                choice = lo + Int(rng.below(static_cast<std::uint64_t>(span.convert_to<int>()) + 1));
            } else if (lower) {
                choice = *lower + Int(rng.below(kWidth + 1));
            } else {
                choice = Int(rng.below(2 * kWidth + 1)) - kWidth;
            }
            val[node] = choice;
        }
        if (!ok) continue;

        // Fractional parts: group indices forced equal, order the groups by
        // the profile, realize with distinct positive rationals.
        std::array<int, 4> group = {0, 1, 2, 3};
        if (spec.eq12) group[2] = group[1];
        if (spec.eq23) group[3] = group[2];
        std::vector<int> reps;
        for (int i = 1; i <= 3; ++i) {
            if (group[i] == i) reps.push_back(i);
        }
        const auto alpha_of = [&](int i, int j) {
            if (i == 1 && j == 2) return prof.a12;
            if (i == 1 && j == 3) return prof.a13;
            return prof.a23;
        };
        // fi > fj iff alpha_ij = 1; sort group representatives so that
        // values can be assigned in increasing fractional order.
        std::sort(reps.begin(), reps.end(), [&](int i, int j) {
            if (i == j) return false;
            return i < j ? alpha_of(i, j) == 0 : alpha_of(j, i) == 1;
        });
        const int den = 7 + static_cast<int>(rng.below(10));
        std::vector<int> nums;
        {
            // distinct numerators in [1, den-1], ascending
            std::vector<int> pool;
            for (int v = 1; v < den; ++v) pool.push_back(v);
            for (std::size_t t = 0; t < reps.size(); ++t) {
                std::size_t pick = rng.below(pool.size());
                nums.push_back(pool[pick]);
                pool.erase(pool.begin() + static_cast<long>(pick));
            }
            std::sort(nums.begin(), nums.end());
        }
        std::array<Rational, 4> f;
        for (std::size_t t = 0; t < reps.size(); ++t) f[reps[t]] = Rational(nums[t], den);
        for (int i = 1; i <= 3; ++i) f[i] = f[group[i]];

        const Rational x0(rng.range(-4, 4), rng.range(1, 4));
        Point x{x0, x0 - Rational(*val[1]) - f[1], x0 - Rational(*val[2]) - f[2],
                x0 - Rational(*val[3]) - f[3]};

        if (!theta1_contains(b, x)) continue;
        const FloorData d = floor_data(x);
        if (!in_stratum(b, d, label)) continue;
        result.status = StratumSample::Status::found;
        result.point = std::move(x);
        return result;
    }

    result.attempts = kAttempts;
    result.status = any_integer_feasible ? StratumSample::Status::exhausted
                                         : StratumSample::Status::infeasible;
    return result;
}

}  // namespace stabreg
