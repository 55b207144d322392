#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "sectavg/minkowski.hpp"
#include "sectavg/section.hpp"

namespace sectavg {

// Segment directions for a zonotope: sum of segments [0, g_i]. Generators
// must be nonzero and pairwise non-parallel so each one spans its own
// parallel class.
struct GeneratorSet {
    int dim = 3;
    std::vector<Vec> generators;
};

inline GeneratorSet make_generator_set(std::vector<Vec> gens) {
    GeneratorSet g;
    g.generators = std::move(gens);
    if (g.generators.empty()) throw DegenerateInput("empty generator set");
    for (const Vec& v : g.generators) {
        if (v.dim != 3) throw UnsupportedDimension("generators live in 3D");
        if (v.is_zero()) throw DegenerateInput("zero generator");
    }
    std::vector<IVec> dirs;
    for (const Vec& v : g.generators) dirs.push_back(canonical_line_direction(v));
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = i + 1; j < dirs.size(); ++j)
            if (dirs[i] == dirs[j]) throw DegenerateInput("parallel generators");
    return g;
}

// Explicit vertex model: hull of all 2^n subset sums. n is capped because the
// enumeration is exponential by design.
inline Polytope build_zonotope(const GeneratorSet& g) {
    const int n = static_cast<int>(g.generators.size());
    if (n > 12) throw TooManyGenerators("explicit zonotope construction capped at 12 generators");
    bool full_rank = false;
    for (int i = 0; i < n && !full_rank; ++i)
        for (int j = i + 1; j < n && !full_rank; ++j)
            for (int k = j + 1; k < n && !full_rank; ++k)
                if (dot(g.generators[static_cast<size_t>(i)],
                        cross(g.generators[static_cast<size_t>(j)],
                              g.generators[static_cast<size_t>(k)])) != 0)
                    full_rank = true;
    if (!full_rank) throw RankDeficient("generators span less than 3 dimensions");
    std::vector<Vec> pts;
    pts.reserve(static_cast<size_t>(1) << n);
    pts.push_back(Vec::zero(3));
    for (int i = 0; i < n; ++i) {
        size_t sz = pts.size();
        for (size_t s = 0; s < sz; ++s)
            pts.push_back(pts[s] + g.generators[static_cast<size_t>(i)]);
    }
    return convex_hull(pts, 3);
}

// Coplanarity structure of the generators: hyperedges are the maximal sets
// whose directions lie in one plane through the origin. Every pair of
// generators belongs to exactly one hyperedge (a generic pair forms a
// 2-element one). Generator signs are canonicalized first, so the structure
// only depends on the spanned lines.
struct GeneratorHypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;
    std::vector<int> degrees;
};

inline GeneratorHypergraph coplanarity_hypergraph(const GeneratorSet& g) {
    const int n = static_cast<int>(g.generators.size());
    std::vector<Vec> dirs;
    dirs.reserve(static_cast<size_t>(n));
    for (const Vec& v : g.generators) {
        IVec d = canonical_line_direction(v);
        dirs.emplace_back(Rat(d[0]), Rat(d[1]), Rat(d[2]));
    }
    std::map<IVec, std::vector<int>> by_plane; // canonical plane normal -> members
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec nrm = cross(dirs[static_cast<size_t>(i)], dirs[static_cast<size_t>(j)]);
            auto& mem = by_plane[canonical_line_direction(nrm)];
            if (std::find(mem.begin(), mem.end(), i) == mem.end()) mem.push_back(i);
            if (std::find(mem.begin(), mem.end(), j) == mem.end()) mem.push_back(j);
        }
    GeneratorHypergraph h;
    h.n = n;
    h.degrees.assign(static_cast<size_t>(n), 0);
    for (auto& [nrm, mem] : by_plane) {
        std::sort(mem.begin(), mem.end());
        h.edges.push_back(mem);
    }
    std::sort(h.edges.begin(), h.edges.end());
    for (const auto& e : h.edges)
        for (int v : e) ++h.degrees[static_cast<size_t>(v)];
    return h;
}

struct LambdaPrediction {
    bool constant = false;
    int lambda = 0; // 2 * common degree when constant
    std::vector<int> degrees;
};

inline LambdaPrediction predict_lambda(const GeneratorHypergraph& h) {
    LambdaPrediction out;
    out.degrees = h.degrees;
    if (h.degrees.empty()) return out;
    out.constant = std::all_of(h.degrees.begin(), h.degrees.end(),
                               [&](int d) { return d == h.degrees[0]; });
    if (out.constant) out.lambda = 2 * h.degrees[0];
    return out;
}

// A polytope is a zonotope exactly when all its 2-faces are centrally
// symmetric. For a polygon that is central symmetry of the polygon itself;
// a segment is trivially a zonotope.
inline bool is_zonotope(const Polytope& p) {
    if (p.rank == 1) return true;
    if (p.rank == 2) {
        std::vector<Vec> cyc;
        for (int i : p.facets[0]) cyc.push_back(p.vertex(i));
        return is_centrally_symmetric(cyc);
    }
    for (const auto& f : p.facets) {
        std::vector<Vec> cyc;
        cyc.reserve(f.size());
        for (int i : f) cyc.push_back(p.vertex(i));
        if (!is_centrally_symmetric(cyc)) return false;
    }
    return true;
}

inline bool is_half_zonotope(const Polytope& p) { return is_zonotope(difference_body(p)); }

// For a zonotope, each parallel class consists of translates of one
// generator, so the class sum divided by the class size recovers it (up to
// the canonical sign).
inline GeneratorSet recover_generators(const Polytope& p) {
    EdgeClassPartition part = edge_classes(p);
    std::vector<Vec> gens;
    gens.reserve(part.classes.size());
    for (const EdgeClass& c : part.classes)
        gens.push_back(Rat(1, static_cast<int>(c.edges.size())) * c.class_sum);
    return make_generator_set(std::move(gens));
}

} // namespace sectavg
