#pragma once

#include <thread>
#include <vector>

#include "sectavg/cut.hpp"
#include "sectavg/stats.hpp"

namespace sectavg {

enum class Criticality { subcritical, critical, supercritical };

inline const char* criticality_name(Criticality c) {
    switch (c) {
    case Criticality::subcritical: return "subcritical";
    case Criticality::critical: return "critical";
    default: return "supercritical";
    }
}

// One generic cut of a V0-vertex body: both children together have
// V0 + 2 k* vertices, where k* counts the section polygon's vertices, so the
// child mean is V0/2 + k*. The cut is critical when k* = V0/2.
struct CutRecord {
    Vec z;
    Rat t;
    int k_star = 0;
    int v0 = 0, v11 = 0, v12 = 0;
    Rat v1;
    Criticality cut_class = Criticality::subcritical;
};

inline CutRecord classify_cut(const Polytope& p, const Vec& z, const Rat& t) {
    CutPieces pieces = cut_both_sides(p, z, t);
    CutRecord r;
    r.z = z;
    r.t = t;
    r.k_star = pieces.k_star;
    r.v0 = p.vertex_count();
    r.v11 = pieces.below.vertex_count();
    r.v12 = pieces.above.vertex_count();
    if (r.v11 + r.v12 != r.v0 + 2 * r.k_star)
        throw Error("cut bookkeeping broken: V11 + V12 != V0 + 2k*");
    r.v1 = Rat(r.v11 + r.v12, 2);
    int rel = sign_of(Rat(2 * r.k_star - r.v0));
    r.cut_class = rel < 0   ? Criticality::subcritical
                  : rel > 0 ? Criticality::supercritical
                            : Criticality::critical;
    return r;
}

// expected child vertex count for a fixed direction with uniform level
inline Rat expected_V1_direction(const Polytope& p, const Vec& z) {
    return Rat(p.vertex_count(), 2) + average_vertices_exact(p, z);
}

// Polytope-level verdict: critical when the direction-averaged child count
// equals V0. Constant-A bodies get an exact, seed-independent verdict from
// the probe certificate; otherwise the verdict is a Monte Carlo point
// estimate with its standard error.
struct CriticalityVerdict {
    Criticality verdict = Criticality::subcritical;
    bool exact = false;
    Rat lambda;       // constant A value when exact
    Rat v0_half;
    double v1_mean = 0.0;
    double v1_std_error = 0.0;
    int dirs = 0;
};

inline CriticalityVerdict criticality_of_polytope(const Polytope& p, int n_dirs,
                                                  std::uint64_t seed) {
    if (p.rank != p.dim) throw DegenerateInput("criticality needs a full-dimensional body");
    CriticalityVerdict out;
    out.v0_half = Rat(p.vertex_count(), 2);
    ProbeResult probe = constant_A_probe(p, 64, derive_subseed(seed, 0));
    if (probe.constant) {
        out.exact = true;
        out.lambda = probe.value;
        out.dirs = probe.dirs_checked;
        int rel = sign_of(probe.value - out.v0_half);
        out.verdict = rel < 0   ? Criticality::subcritical
                      : rel > 0 ? Criticality::supercritical
                                : Criticality::critical;
        out.v1_mean = to_double(out.v0_half + probe.value);
        out.v1_std_error = 0.0;
        return out;
    }
    SphericalMean sm = spherical_mean_A(p, n_dirs, derive_subseed(seed, 1));
    out.dirs = sm.dirs;
    out.v1_mean = to_double(out.v0_half) + sm.mean;
    out.v1_std_error = sm.std_error;
    double gap = sm.mean - to_double(out.v0_half);
    out.verdict = gap < 0 ? Criticality::subcritical
                 : gap > 0 ? Criticality::supercritical
                           : Criticality::critical;
    return out;
}

// directions snapped to denominator 2^12 and levels to 2^20 steps of the
// support interval: exact arithmetic with bounded per-step coordinate growth
inline CutPieces random_cut(const Polytope& q, Rng& rng) {
    for (int retry = 0; retry < 100; ++retry) {
        Vec z = random_sphere_direction(rng, q.dim, 12);
        SupportInterval s = support_interval(q, z);
        Rat t = s.t_minus + rng.dyadic_unit(20) * s.width();
        try {
            return cut_both_sides(q, z, t);
        } catch (const NonGenericCut&) {
        }
    }
    throw NonGenericCut("random cut: too many vertex hits");
}

inline Polytope random_cut_one_side(const Polytope& q, Rng& rng) {
    for (int retry = 0; retry < 100; ++retry) {
        Vec z = random_sphere_direction(rng, q.dim, 12);
        SupportInterval s = support_interval(q, z);
        Rat t = s.t_minus + rng.dyadic_unit(20) * s.width();
        Side side = (rng.u64() & 1) ? Side::above : Side::below;
        try {
            return cut_halfspace(q, z, t, side);
        } catch (const NonGenericCut&) {
        }
    }
    throw NonGenericCut("random cut: too many vertex hits");
}

enum class FragmentPolicy { full, paths, uniform };

struct FragmentStep {
    int step = 0;
    double mean_v = 0.0;
    double std_error = 0.0;
    std::int64_t n_fragments = 0;
};

struct FragmentSeries {
    FragmentPolicy policy = FragmentPolicy::full;
    std::vector<FragmentStep> steps; // includes the step-0 row for the body itself
};

// Repeated halving recursion. full tracks the whole population of 2^i
// fragments (mean is exact over the realized population, std_error 0);
// paths follows `count` independent root-to-leaf paths with uniform child
// choice, an unbiased estimator of the population mean. Per-path substreams
// make the result identical for any thread count. uniform is the
// identical-fragments reading: every step re-cuts the frozen original body
// `count` times and time-averages V1 = V0/2 + k*, so the series is
// stationary in expectation exactly when the body is critical; it runs
// single-threaded and ignores `threads`.
inline FragmentSeries fragment_recursion(const Polytope& p, int steps, FragmentPolicy policy,
                                         int count, std::uint64_t seed, int threads = 1) {
    if (p.rank != p.dim) throw DegenerateInput("fragmentation needs a full-dimensional body");
    if (steps < 1) throw DegenerateInput("fragmentation needs at least one step");
    FragmentSeries out;
    out.policy = policy;
    out.steps.push_back({0, static_cast<double>(p.vertex_count()), 0.0, 1});

    if (policy == FragmentPolicy::full) {
        if (steps > 10)
            throw PopulationCapExceeded("full tracking is capped at 2^10 fragments");
        std::vector<Polytope> pop{p};
        Rng rng(seed);
        for (int i = 1; i <= steps; ++i) {
            std::vector<Polytope> next;
            next.reserve(pop.size() * 2);
            for (const Polytope& q : pop) {
                CutPieces c = random_cut(q, rng);
                next.push_back(std::move(c.below));
                next.push_back(std::move(c.above));
            }
            pop = std::move(next);
            double sum = 0;
            for (const Polytope& q : pop) sum += q.vertex_count();
            out.steps.push_back(
                {i, sum / static_cast<double>(pop.size()), 0.0, static_cast<std::int64_t>(pop.size())});
        }
        return out;
    }

    if (policy == FragmentPolicy::uniform) {
        if (count < 2) throw DegenerateInput("uniform policy needs at least two cuts per step");
        double v0_half = static_cast<double>(p.vertex_count()) / 2.0;
        for (int i = 1; i <= steps; ++i) {
            Rng rng(derive_subseed(seed, static_cast<std::uint64_t>(i)));
            Accumulator acc;
            for (int c = 0; c < count; ++c)
                acc.add(v0_half + static_cast<double>(random_cut(p, rng).k_star));
            out.steps.push_back({i, acc.mean, acc.stderr_of_mean(), count});
        }
        return out;
    }

    if (count < 2) throw DegenerateInput("paths policy needs at least two paths");
    std::vector<std::vector<int>> v(static_cast<size_t>(count),
                                    std::vector<int>(static_cast<size_t>(steps)));
    auto run_range = [&](int lo, int hi) {
        for (int j = lo; j < hi; ++j) {
            Rng rng(derive_subseed(seed, static_cast<std::uint64_t>(j)));
            Polytope frag = p;
            for (int i = 0; i < steps; ++i) {
                frag = random_cut_one_side(frag, rng);
                v[static_cast<size_t>(j)][static_cast<size_t>(i)] = frag.vertex_count();
            }
        }
    };
    if (threads <= 1) {
        run_range(0, count);
    } else {
        std::vector<std::thread> pool;
        int chunk = (count + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            int lo = w * chunk, hi = std::min(count, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    for (int i = 0; i < steps; ++i) {
        Accumulator acc;
        for (int j = 0; j < count; ++j)
            acc.add(static_cast<double>(v[static_cast<size_t>(j)][static_cast<size_t>(i)]));
        out.steps.push_back({i + 1, acc.mean, acc.stderr_of_mean(), count});
    }
    return out;
}

// Flags the recursion steps whose mean did not move outside the combined
// noise band; a body behaving critically keeps the flag on everywhere.
struct WeakScan {
    FragmentSeries series;
    std::vector<bool> flat; // flat[i]: step i -> i+1 transition within the band
};

inline WeakScan weak_criticality_scan(const Polytope& p, int steps, int n_paths,
                                      std::uint64_t seed, int threads = 1) {
    WeakScan w;
    w.series = fragment_recursion(p, steps, FragmentPolicy::paths, n_paths, seed, threads);
    for (size_t i = 0; i + 1 < w.series.steps.size(); ++i) {
        const FragmentStep &a = w.series.steps[i], &b = w.series.steps[i + 1];
        double band = 3.0 * std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
        w.flat.push_back(std::fabs(b.mean_v - a.mean_v) <= band);
    }
    return w;
}

} // namespace sectavg
