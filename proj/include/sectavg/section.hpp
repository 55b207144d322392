#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "sectavg/polytope.hpp"
#include "sectavg/rng.hpp"
#include "sectavg/stats.hpp"

namespace sectavg {

struct SupportInterval {
    Rat t_minus, t_plus;
    int argmin = -1, argmax = -1; // witnesses among the vertex indices
    Rat width() const { return t_plus - t_minus; }
};

inline SupportInterval support_interval(const Polytope& p, const Vec& z) {
    if (z.dim != p.dim) throw DegenerateInput("direction dimension mismatch");
    if (z.is_zero()) throw ZeroDirection("support interval of the zero direction");
    SupportInterval s;
    for (int i = 0; i < p.vertex_count(); ++i) {
        Rat t = dot(z, p.vertex(i));
        if (s.argmin < 0 || t < s.t_minus) {
            s.t_minus = t;
            s.argmin = i;
        }
        if (s.argmax < 0 || t > s.t_plus) {
            s.t_plus = t;
            s.argmax = i;
        }
    }
    return s;
}

// Edges grouped by parallel class. class_sum adds the edge vectors oriented
// along the canonical representative of the class direction.
struct EdgeClass {
    IVec direction;
    std::vector<int> edges; // indices into Polytope::edges
    Vec class_sum;
};

struct EdgeClassPartition {
    std::vector<EdgeClass> classes;
};

inline EdgeClassPartition edge_classes(const Polytope& p) {
    std::map<IVec, size_t> where;
    EdgeClassPartition out;
    for (int e = 0; e < p.edge_count(); ++e) {
        Vec ev = p.edge_vector(p.edges[static_cast<size_t>(e)]);
        IVec d = canonical_line_direction(ev);
        if (canonical_flips_sign(ev)) ev = -ev;
        auto it = where.find(d);
        if (it == where.end()) {
            where.emplace(d, out.classes.size());
            out.classes.push_back({d, {e}, ev});
        } else {
            EdgeClass& c = out.classes[it->second];
            c.edges.push_back(e);
            c.class_sum = c.class_sum + ev;
        }
    }
    return out;
}

// Number of vertices of the section polygon at level t, which equals the
// number of edges the plane crosses. A level strictly outside the support
// yields 0; a level through a vertex is rejected as non-generic.
inline int slice_vertex_count(const Polytope& p, const Vec& z, const Rat& t) {
    if (z.dim != p.dim) throw DegenerateInput("direction dimension mismatch");
    if (z.is_zero()) throw ZeroDirection("slice along the zero direction");
    std::vector<int> sgn(static_cast<size_t>(p.vertex_count()));
    for (int i = 0; i < p.vertex_count(); ++i) {
        int s = sign_of(dot(z, p.vertex(i)) - t);
        if (s == 0) throw NonGenericLevel("slice level passes through a vertex");
        sgn[static_cast<size_t>(i)] = s;
    }
    int crossings = 0;
    for (const auto& e : p.edges)
        if (sgn[static_cast<size_t>(e[0])] != sgn[static_cast<size_t>(e[1])]) ++crossings;
    return crossings;
}

// Exact level-average of section vertex counts over the support interval:
// the integral of the count equals the sum of |z . e| over all edges, because
// each edge contributes the length of its level span.
inline Rat average_vertices_exact(const Polytope& p, const Vec& z) {
    SupportInterval s = support_interval(p, z);
    if (s.width() == 0) throw ZeroWidth("support interval has zero length");
    Rat sum(0);
    for (const auto& e : p.edges) sum += abs(dot(z, p.edge_vector(e)));
    return sum / s.width();
}

// Step profile of t -> slice_vertex_count for one direction: breakpoints at
// the distinct vertex levels, a constant count on each open interval between
// them. Lookups run on cached doubles and fall back to exact comparison only
// near a breakpoint, so sampling stays cheap without giving up exactness.
struct SweepProfile {
    Rat t_minus, width;
    std::vector<Rat> breaks;    // normalized levels in [0,1], first 0, last 1
    std::vector<double> breaks_d;
    std::vector<int> counts;    // counts[i] is the value on (breaks[i], breaks[i+1])

    static SweepProfile build(const Polytope& p, const Vec& z) {
        SweepProfile prof;
        SupportInterval s = support_interval(p, z);
        if (s.width() == 0) throw ZeroWidth("support interval has zero length");
        prof.t_minus = s.t_minus;
        prof.width = s.width();
        std::map<Rat, int> level_index;
        for (int i = 0; i < p.vertex_count(); ++i)
            level_index.emplace((dot(z, p.vertex(i)) - s.t_minus) / prof.width, 0);
        int k = 0;
        for (auto& [u, idx] : level_index) idx = k++;
        prof.breaks.reserve(level_index.size());
        for (const auto& [u, idx] : level_index) {
            prof.breaks.push_back(u);
            prof.breaks_d.push_back(to_double(u));
        }
        std::vector<int> diff(prof.breaks.size(), 0);
        for (const auto& e : p.edges) {
            Rat a = (dot(z, p.vertex(e[0])) - s.t_minus) / prof.width;
            Rat b = (dot(z, p.vertex(e[1])) - s.t_minus) / prof.width;
            if (a == b) continue; // edge parallel to the slicing plane
            if (b < a) std::swap(a, b);
            ++diff[static_cast<size_t>(level_index[a])];
            --diff[static_cast<size_t>(level_index[b])];
        }
        int run = 0;
        prof.counts.resize(prof.breaks.size() - 1);
        for (size_t i = 0; i + 1 < prof.breaks.size(); ++i) {
            run += diff[i];
            prof.counts[i] = run;
        }
        return prof;
    }

    // count at the dyadic level u = num/2^logden in (0,1)
    int count_at_dyadic(std::uint64_t num, int logden) const {
        double ud = std::ldexp(static_cast<double>(num), -logden);
        auto it = std::upper_bound(breaks_d.begin(), breaks_d.end(), ud);
        auto idx = static_cast<size_t>(it - breaks_d.begin()); // first break > ud, by doubles
        // doubles are trusted only away from the breakpoints
        const double margin = 1e-9;
        bool risky = (idx < breaks_d.size() && breaks_d[idx] - ud < margin) ||
                     (idx > 0 && ud - breaks_d[idx - 1] < margin);
        if (risky) {
            Rat u(Int(num), Int(1) << logden);
            auto eit = std::upper_bound(breaks.begin(), breaks.end(), u);
            idx = static_cast<size_t>(eit - breaks.begin());
            if (idx > 0 && breaks[idx - 1] == u)
                throw NonGenericLevel("sample level hits a vertex exactly");
        }
        if (idx == 0 || idx >= breaks.size()) return 0; // outside [0,1]: empty section
        return counts[idx - 1];
    }
};

struct SweepResult {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
};

// Monte Carlo estimate of the exact level-average: uniform levels in the
// support interval, resampling the measure-zero vertex hits.
inline SweepResult average_vertices_sweep(const Polytope& p, const Vec& z, std::int64_t samples,
                                          std::uint64_t seed) {
    if (samples < 2) throw DegenerateInput("sweep needs at least 2 samples");
    SweepProfile prof = SweepProfile::build(p, z);
    Rng rng(seed);
    std::int64_t sum = 0, sumsq = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        int c = -1;
        for (int retry = 0; retry < 100; ++retry) {
            std::uint64_t k = rng.u64() >> 32; // u = (2k+1)/2^33, strictly inside (0,1)
            try {
                c = prof.count_at_dyadic(2 * k + 1, 33);
                break;
            } catch (const NonGenericLevel&) {
            }
        }
        if (c < 0) throw NonGenericLevel("sweep: too many degenerate levels");
        sum += c;
        sumsq += static_cast<std::int64_t>(c) * c;
    }
    SweepResult r;
    r.samples = samples;
    r.mean = static_cast<double>(sum) / static_cast<double>(samples);
    double n = static_cast<double>(samples);
    double var = (static_cast<double>(sumsq) - n * r.mean * r.mean) / (n - 1.0);
    if (var < 0) var = 0;
    r.std_error = std::sqrt(var / n);
    return r;
}

struct SphericalMean {
    double mean = 0.0;
    double std_error = 0.0;
    int dirs = 0;
    bool constant_exact = false; // all sampled values were one exact rational
    Rat constant_value;
};

// Mean of the exact directional average over random sphere directions.
// Directions are snapped to rationals, every A evaluation stays exact; only
// the averaging across directions is floating point.
inline SphericalMean spherical_mean_A(const Polytope& p, int n_dirs, std::uint64_t seed) {
    if (n_dirs < 1) throw DegenerateInput("need at least one direction");
    Rng rng(seed);
    Accumulator acc;
    SphericalMean out;
    bool first = true;
    bool all_equal = true;
    Rat first_value;
    for (int i = 0; i < n_dirs; ++i) {
        Rat a;
        bool got = false;
        for (int retry = 0; retry < 100 && !got; ++retry) {
            Vec z = random_sphere_direction(rng, p.dim);
            try {
                a = average_vertices_exact(p, z);
                got = true;
            } catch (const ZeroWidth&) { // flat body seen edge-on, resample
            }
        }
        if (!got) throw ZeroWidth("spherical mean: direction sampling failed");
        if (first) {
            first_value = a;
            first = false;
        } else if (a != first_value) {
            all_equal = false;
        }
        acc.add(to_double(a));
    }
    out.dirs = n_dirs;
    out.constant_exact = all_equal;
    if (all_equal) {
        out.constant_value = first_value;
        out.mean = to_double(first_value);
        out.std_error = 0.0;
    } else {
        out.mean = acc.mean;
        out.std_error = acc.stderr_of_mean();
    }
    return out;
}

struct ProbeResult {
    bool constant = false;
    Rat value;        // the common value when constant
    Vec z1, z2;       // witness pair otherwise
    Rat a1, a2;
    int dirs_checked = 0;
};

// Decides constancy of z -> A(P,z) over random integer directions: exact
// equality across all probes, or a witness pair of differing exact values.
inline ProbeResult constant_A_probe(const Polytope& p, int n_dirs, std::uint64_t seed) {
    if (n_dirs < 2) throw DegenerateInput("probe needs at least two directions");
    Rng rng(seed);
    ProbeResult out;
    Vec z0;
    Rat a0;
    for (int i = 0; i < n_dirs; ++i) {
        Vec z = random_rational_direction(rng, p.dim);
        Rat a = average_vertices_exact(p, z);
        if (i == 0) {
            z0 = z;
            a0 = a;
        } else if (a != a0) {
            out.constant = false;
            out.z1 = z0;
            out.a1 = a0;
            out.z2 = z;
            out.a2 = a;
            out.dirs_checked = i + 1;
            return out;
        }
    }
    out.constant = true;
    out.value = a0;
    out.dirs_checked = n_dirs;
    return out;
}

} // namespace sectavg
