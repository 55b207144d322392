#pragma once

#include <algorithm>

#include "sectavg/hull.hpp"

namespace sectavg {

// Hull of all pairwise vertex sums; the result may drop rank (e.g. the sum
// of parallel segments), which the hull reports honestly.
inline Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
    if (a.dim != b.dim) throw DegenerateInput("minkowski: ambient dimensions differ");
    std::vector<Vec> sums;
    sums.reserve(a.vertices.size() * b.vertices.size());
    for (const Vec& u : a.vertices)
        for (const Vec& v : b.vertices) sums.push_back(u + v);
    return convex_hull_any_rank(sums, a.dim);
}

// Point reflection through the origin. Vertices are negated in place; facet
// cycles are reversed in 3D because the reflection is orientation-reversing
// there, and kept in 2D where it is a half-turn.
inline Polytope reflect(const Polytope& p) {
    Polytope r = p;
    for (Vec& v : r.vertices) v = -v;
    if (r.dim == 3 && r.rank == 3)
        for (auto& f : r.facets) std::reverse(f.begin(), f.end());
    r.check_geometry();
    return r;
}

inline Polytope difference_body(const Polytope& p) { return minkowski_sum(p, reflect(p)); }

} // namespace sectavg
