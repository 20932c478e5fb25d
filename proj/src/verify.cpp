#include "stabregion/verify.hpp"

#include "stabregion/rng.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

namespace stabreg {

namespace {

int thread_count() {
    if (const char* env = std::getenv("STABREGION_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Order-preserving parallel map over [0, n): each worker fills its own slice
// of the output, so results do not depend on the thread count.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    const int threads = std::min<int>(thread_count(), n == 0 ? 1 : static_cast<int>(n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

Rational random_rational(SplitMix64& rng, int den_bound, const Rational& lo,
                         const Rational& hi) {
    const long long d = rng.range(1, den_bound);
    Int nlo = floor(lo * d);
    if (Rational(nlo) < lo * d) ++nlo;  // smallest numerator with nlo/d >= lo
    const Int nhi = floor(hi * d);
    Int span = nhi - nlo;
    if (span < 0) span = 0;
    const Int n = nlo + Int(rng.below(span.convert_to<std::uint64_t>() + 1));
    return Rational(n, Int(d));
}

Point random_point(SplitMix64& rng, const SampleStrategy& s) {
    return Point{random_rational(rng, s.denominator_bound, s.lo, s.hi),
                 random_rational(rng, s.denominator_bound, s.lo, s.hi),
                 random_rational(rng, s.denominator_bound, s.lo, s.hi),
                 random_rational(rng, s.denominator_bound, s.lo, s.hi)};
}

// Force integral differences inside randomly chosen coordinate groups.
Point integrality_point(SplitMix64& rng, const SampleStrategy& s) {
    int group[4] = {0, 1, 2, 3};
    for (int i = 1; i < 4; ++i) {
        if (rng.below(2) == 0) group[i] = group[static_cast<int>(rng.below(i))];
    }
    bool merged = group[1] != 1 || group[2] != 2 || group[3] != 3;
    if (!merged) {
        const int j = 1 + static_cast<int>(rng.below(3));
        group[j] = group[static_cast<int>(rng.below(j))];
    }
    // normalize group ids through chains (group[i] < i always)
    for (int i = 1; i < 4; ++i) group[i] = group[group[i]];

    Rational base[4];
    for (int i = 0; i < 4; ++i) {
        if (group[i] == i) base[i] = random_rational(rng, s.denominator_bound, s.lo, s.hi);
    }
    Point x;
    Rational* coords[4] = {&x.x0, &x.x1, &x.x2, &x.x3};
    for (int i = 0; i < 4; ++i) {
        if (group[i] == i) {
            *coords[i] = base[i];
        } else {
            *coords[i] = base[group[i]] + Rational(rng.range(-3, 3));
        }
    }
    return x;
}

Point grid_point(SplitMix64 rng, const SampleStrategy& s, std::size_t index) {
    const Int den(s.denominator_bound);
    const Int t_count = floor((s.hi - s.lo) * Rational(den)) + 1;  // values per axis
    std::uint64_t axis_n = t_count.convert_to<std::uint64_t>();
    if (axis_n == 0) axis_n = 1;
    rng.state ^= static_cast<std::uint64_t>(index) * 0xd1342543de82ef95ULL;
    Point x;
    Rational* coords[4] = {&x.x0, &x.x1, &x.x2, &x.x3};
    for (int i = 0; i < 4; ++i) {
        const Int t(rng.below(axis_n));
        *coords[i] = s.lo + Rational(t, den);
    }
    return x;
}

}  // namespace

std::pair<Rational, Rational> default_range(const Bounds& b) {
    Int radius = 4;
    Int max_abs = 0;
    bool any_finite = false;
    for (const ExtInt* e : {&b.k.k01, &b.k.k02, &b.k.k03, &b.k.k12, &b.k.k13, &b.k.k23}) {
        if (e->finite()) {
            any_finite = true;
            const Int a = abs(e->value());
            if (a > max_abs) max_abs = a;
        }
    }
    if (any_finite) {
        Int r = max_abs + 2;
        if (b.K03.finite()) r += abs(b.K03.value());
        if (r > radius) radius = r;
    }
    return {Rational(-radius), Rational(radius)};
}

SampleSet sample_points(const Bounds& b, const SampleStrategy& s, std::size_t n) {
    SampleSet out;
    out.points.reserve(n);
    switch (s.mode) {
        case SampleStrategy::Mode::generic:
            for (std::size_t i = 0; i < n; ++i) {
                SplitMix64 rng(s.seed ^ (0x8000000000000000ULL | (i * 0x9e3779b97f4a7c15ULL)));
                out.points.push_back(random_point(rng, s));
            }
            break;
        case SampleStrategy::Mode::integrality:
            for (std::size_t i = 0; i < n; ++i) {
                SplitMix64 rng(s.seed ^ (0x4000000000000000ULL | (i * 0x9e3779b97f4a7c15ULL)));
                out.points.push_back(integrality_point(rng, s));
            }
            break;
        case SampleStrategy::Mode::delta_strata: {
            const auto& labels = all_delta_labels();
            std::size_t misses = 0;
            for (std::size_t i = 0; out.points.size() < n; ++i) {
                const DeltaLabel label = labels[i % labels.size()];
                const StratumSample smp = sample_on_stratum(b, label, s.seed + i);
                if (smp.status == StratumSample::Status::found) {
                    out.points.push_back(*smp.point);
                    misses = 0;
                } else if (++misses >= labels.size()) {
                    break;  // one full round with nothing obtainable
                }
            }
            out.shortfall = n - out.points.size();
            break;
        }
        case SampleStrategy::Mode::grid:
            for (std::size_t i = 0; i < n; ++i) {
                out.points.push_back(grid_point(SplitMix64(s.seed), s, i));
            }
            break;
    }
    return out;
}

HomDegrees random_collection(std::uint64_t seed) {
    SplitMix64 rng(seed * 0x2545f4914f6cdd1dULL + 17);
    HomDegrees k;
    for (ExtInt* e : {&k.k01, &k.k02, &k.k03, &k.k12, &k.k13, &k.k23}) {
        *e = ExtInt(rng.range(-3, 5));
    }
    return k;
}

namespace {

long long elapsed_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

Report check_theorem(const Bounds& b, const std::vector<Point>& points, std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.check = "theorem";
    rep.n_points = points.size();

    struct Row {
        int verdict = 0;  // 0 outside, 1 delta, 2 witnessed, 3 unaccounted, 4 delta+witness
        bool fallback = false;
        std::vector<DeltaLabel> merged;
        RelationProfile profile;
    };
    const auto rows = parallel_map<Row>(points.size(), [&](std::size_t i) {
        const Point& x = points[i];
        Row row;
        if (!theta1_contains(b, x)) return row;
        row.profile = relation_profile(x);
        row.merged = delta_membership(b, x);
        const auto witness = theta2_contains(b, x);
        if (row.merged.empty() && witness) {
            row.verdict = 2;
            row.fallback = construct_witness(b, x).fallback;
        } else if (row.merged.empty()) {
            row.verdict = 3;
        } else {
            row.verdict = witness ? 4 : 1;
        }
        return row;
    });

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        switch (row.verdict) {
            case 0: ++rep.outside; break;
            case 1: ++rep.in_delta; break;
            case 2:
                ++rep.witnessed;
                row.fallback ? ++rep.fallbacks : ++rep.prescribed_ok;
                break;
            case 3:
            case 4: {
                if (row.verdict == 3) ++rep.unaccounted;
                Mismatch m;
                m.index = i;
                m.x = points[i];
                m.kind = row.verdict == 3 ? "witness-missing" : "witness-in-delta";
                m.merged = row.merged;
                m.witness_found = row.verdict == 4;
                m.profile = row.profile;
                m.seed = seed;
                rep.mismatches.push_back(std::move(m));
                break;
            }
        }
    }
    rep.elapsed_ms = elapsed_since(t0);
    return rep;
}

Report check_triple_law(const std::vector<Point>& points, std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.check = "triple-law";
    rep.n_points = points.size();
    const auto bad = parallel_map<int>(points.size(), [&](std::size_t i) {
        return relation_profile(points[i]).valid() ? 0 : 1;
    });
    for (std::size_t i = 0; i < bad.size(); ++i) {
        if (!bad[i]) continue;
        Mismatch m;
        m.index = i;
        m.x = points[i];
        m.kind = "triple-law";
        m.profile = relation_profile(points[i]);
        m.seed = seed;
        rep.mismatches.push_back(std::move(m));
    }
    rep.elapsed_ms = elapsed_since(t0);
    return rep;
}

Report check_shift_ranges(const std::vector<Point>& points, std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.check = "shift-ranges";
    rep.n_points = points.size();
    const auto bad = parallel_map<int>(points.size(), [&](std::size_t i) {
        const Point& x = points[i];
        for (int a = 1; a <= 3; ++a) {
            for (int c = a + 1; c <= 3; ++c) {
                const Rational d = (x[a] + Rational(floor(x.x0 - x[a]))) -
                                   (x[c] + Rational(floor(x.x0 - x[c])));
                if (relation_alpha(x, a, c) == 0) {
                    if (!(0 <= d && d < 1)) return 1;
                } else {
                    if (!(-1 < d && d < 0)) return 1;
                }
            }
        }
        return 0;
    });
    for (std::size_t i = 0; i < bad.size(); ++i) {
        if (!bad[i]) continue;
        Mismatch m;
        m.index = i;
        m.x = points[i];
        m.kind = "range";
        m.profile = relation_profile(points[i]);
        m.seed = seed;
        rep.mismatches.push_back(std::move(m));
    }
    rep.elapsed_ms = elapsed_since(t0);
    return rep;
}

Report check_delta_decomposition(const Bounds& b, const std::vector<Point>& points,
                                 std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.check = "decomposition";
    rep.n_points = points.size();
    struct Row {
        bool inside = false;
        std::vector<DeltaLabel> merged, per_case;
    };
    const auto rows = parallel_map<Row>(points.size(), [&](std::size_t i) {
        Row row;
        if (!theta1_contains(b, points[i])) return row;
        row.inside = true;
        row.merged = delta_membership(b, points[i]);
        row.per_case = case_delta_membership(b, points[i]);
        return row;
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        if (!row.inside) {
            ++rep.outside;
            continue;
        }
        if (row.merged.empty() != row.per_case.empty()) {
            Mismatch m;
            m.index = i;
            m.x = points[i];
            m.kind = "decomposition";
            m.merged = row.merged;
            m.per_case = row.per_case;
            m.profile = relation_profile(points[i]);
            m.seed = seed;
            rep.mismatches.push_back(std::move(m));
        } else if (!row.merged.empty()) {
            ++rep.in_delta;
        }
    }
    rep.elapsed_ms = elapsed_since(t0);
    return rep;
}

}  // namespace stabreg
