#pragma once

#include <algorithm>
#include <vector>

#include "sectavg/hull.hpp"
#include "sectavg/rng.hpp"

namespace testutil {

using namespace sectavg;

inline Vec v3(long x, long y, long z) { return Vec(Rat(x), Rat(y), Rat(z)); }
inline Vec v2(long x, long y) { return Vec(Rat(x), Rat(y)); }

inline Polytope tetrahedron() {
    return convex_hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}, 3);
}

inline Polytope cube01() {
    std::vector<Vec> pts;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c) pts.push_back(v3(a, b, c));
    return convex_hull(pts, 3);
}

inline Polytope octahedron() {
    return convex_hull(
        {v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0), v3(0, -1, 0), v3(0, 0, 1), v3(0, 0, -1)}, 3);
}

inline std::vector<Vec> sorted_vertices(const Polytope& p) {
    std::vector<Vec> v = p.vertices;
    std::sort(v.begin(), v.end());
    return v;
}

// integer point cloud that is almost surely full-dimensional; retries if not
inline Polytope random_hull(Rng& rng, int dim, int points, long box = 8) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<Vec> pts;
        for (int i = 0; i < points; ++i) {
            Vec v = Vec::zero(dim);
            for (int c = 0; c < dim; ++c) v[c] = Rat(rng.uniform_int(-box, box));
            pts.push_back(v);
        }
        try {
            return convex_hull(pts, dim);
        } catch (const DegenerateInput&) {
        }
    }
    throw Error("random_hull never produced a full-dimensional body");
}

} // namespace testutil
