#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "sectavg/rng.hpp"
#include "sectavg/zonotope.hpp"

namespace sectavg {

struct ExampleParams {
    std::optional<int> n, k, l;
    std::optional<std::uint64_t> seed;
};

struct BuiltinExample {
    std::string name;
    std::optional<Polytope> polytope;
    std::optional<GeneratorSet> generators;
};

namespace detail {

// polygon in the z=0 plane from integer coordinates
inline Polytope polygon_in_xy(const std::vector<std::array<long, 2>>& pts) {
    std::vector<Vec> v;
    v.reserve(pts.size());
    for (const auto& p : pts) v.emplace_back(Rat(p[0]), Rat(p[1]), Rat(0));
    return convex_hull_any_rank(v, 3);
}

// polygon in the x=0 plane, coordinates interpreted as (y, z)
inline Polytope polygon_in_yz(const std::vector<std::array<long, 2>>& pts) {
    std::vector<Vec> v;
    v.reserve(pts.size());
    for (const auto& p : pts) v.emplace_back(Rat(0), Rat(p[0]), Rat(p[1]));
    return convex_hull_any_rank(v, 3);
}

// strict convexity of the cyclic list in its given order, plus pairwise
// non-parallel edges, so each edge spans its own parallel class
inline bool polygon_generic(const std::vector<std::array<long, 2>>& p) {
    const int m = static_cast<int>(p.size());
    std::vector<std::array<long, 2>> e(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        const auto& a = p[static_cast<size_t>(i)];
        const auto& b = p[static_cast<size_t>((i + 1) % m)];
        e[static_cast<size_t>(i)] = {b[0] - a[0], b[1] - a[1]};
    }
    for (int i = 0; i < m; ++i) {
        const auto& u = e[static_cast<size_t>(i)];
        const auto& v = e[static_cast<size_t>((i + 1) % m)];
        if (u[0] * v[1] - u[1] * v[0] <= 0) return false;
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& u = e[static_cast<size_t>(i)];
            const auto& v = e[static_cast<size_t>(j)];
            if (u[0] * v[1] - u[1] * v[0] == 0) return false;
        }
    return true;
}

// the minimum and maximum of one coordinate must be attained at a unique,
// antipodal pair of indices
inline bool opposite_extremes(const std::vector<std::array<long, 2>>& p, int coord) {
    const int m = static_cast<int>(p.size());
    int lo = 0, hi = 0;
    bool lo_tie = false, hi_tie = false;
    for (int i = 1; i < m; ++i) {
        long x = p[static_cast<size_t>(i)][static_cast<size_t>(coord)];
        long xl = p[static_cast<size_t>(lo)][static_cast<size_t>(coord)];
        long xh = p[static_cast<size_t>(hi)][static_cast<size_t>(coord)];
        if (x == xl) lo_tie = true;
        if (x < xl) {
            lo = i;
            lo_tie = false;
        }
        if (x == xh) hi_tie = true;
        if (x > xh) {
            hi = i;
            hi_tie = false;
        }
    }
    if (lo_tie || hi_tie) return false;
    int d = (hi - lo + m) % m;
    return 2 * d == m;
}

inline bool no_cross_parallel(const std::vector<std::array<long, 2>>& q1,
                              const std::vector<std::array<long, 2>>& q2) {
    // q1 edges live in z=0 as (a,b,0), q2 edges in x=0 as (0,c,d)
    const int m1 = static_cast<int>(q1.size()), m2 = static_cast<int>(q2.size());
    for (int i = 0; i < m1; ++i) {
        long a = q1[static_cast<size_t>((i + 1) % m1)][0] - q1[static_cast<size_t>(i)][0];
        for (int j = 0; j < m2; ++j) {
            long d = q2[static_cast<size_t>((j + 1) % m2)][1] - q2[static_cast<size_t>(j)][1];
            if (a == 0 && d == 0) return false;
        }
    }
    return true;
}

} // namespace detail

// Sum of two fixed quadrilaterals in non-parallel planes. Every edge class
// of the sum has three members, so the directional average is 6 everywhere,
// yet the big facets are the quadrilaterals themselves, which are not
// centrally symmetric.
inline Polytope example_5_1() {
    Polytope q1 = detail::polygon_in_xy({{0, 0}, {4, 1}, {6, 4}, {1, 3}});
    Polytope q2 = detail::polygon_in_yz({{0, 0}, {3, 1}, {4, 6}, {1, 4}});
    return minkowski_sum(q1, q2);
}

// Sum of two perturbed 2k-gons in non-parallel planes. The perturbation is
// about 1/100 of the circumradius, is shared by antipodal vertices so the
// supporting-line pairing survives, and is searched deterministically until
// the polygons are strictly generic and the sum splits into 4k parallel
// classes of k+1 edges each.
inline Polytope example_5_2(int k) {
    if (k < 2 || k > 8) throw UnknownExample("example_5_2 expects 2 <= k <= 8");
    const double pi = 3.14159265358979323846;
    const long radius = 120;
    for (std::uint64_t salt = 0; salt < 64; ++salt) {
        Rng rng(derive_subseed(552000 + static_cast<std::uint64_t>(k), salt));
        auto ring = [&](double phase) {
            std::vector<std::array<long, 2>> pert(static_cast<size_t>(k));
            for (auto& pp : pert) pp = {rng.uniform_int(-1, 1), rng.uniform_int(-1, 1)};
            std::vector<std::array<long, 2>> out(static_cast<size_t>(2 * k));
            for (int i = 0; i < 2 * k; ++i) {
                double ang = pi * i / k + phase;
                const auto& pp = pert[static_cast<size_t>(i % k)];
                out[static_cast<size_t>(i)] = {std::lround(radius * std::cos(ang)) + pp[0],
                                               std::lround(radius * std::sin(ang)) + pp[1]};
            }
            return out;
        };
        auto r1 = ring(0.0);
        auto r2 = ring(pi / (4 * k));
        if (!detail::polygon_generic(r1) || !detail::polygon_generic(r2)) continue;
        if (!detail::opposite_extremes(r1, 0)) continue; // x extremes of the z=0 polygon
        if (!detail::opposite_extremes(r2, 1)) continue; // z extremes of the x=0 polygon
        if (!detail::no_cross_parallel(r1, r2)) continue;
        Polytope p = minkowski_sum(detail::polygon_in_xy(r1), detail::polygon_in_yz(r2));
        EdgeClassPartition classes = edge_classes(p);
        bool ok = static_cast<int>(classes.classes.size()) == 4 * k;
        for (const EdgeClass& c : classes.classes)
            ok = ok && static_cast<int>(c.edges.size()) == k + 1;
        if (ok) return p;
    }
    throw Error("example_5_2: deterministic search exhausted");
}

// Sum of the three coordinate triangles conv{0, f_j, f_k}: ten vertices,
// facets are three triangles, three pentagons and one hexagon, and the
// directional average is 4 like the cube's.
inline Polytope example_5_3() {
    auto tri = [](int skip) {
        std::vector<Vec> pts{Vec::zero(3)};
        for (int j = 0; j < 3; ++j) {
            if (j == skip) continue;
            Vec e = Vec::zero(3);
            e[j] = 1;
            pts.push_back(e);
        }
        return convex_hull_any_rank(pts, 3);
    };
    return minkowski_sum(minkowski_sum(tri(0), tri(1)), tri(2));
}

// n generator directions with no coplanar triple: points on the parabola
// (i, i^2) lifted to the plane z=1, where no three are collinear.
inline GeneratorSet example_6_1(int n) {
    if (n < 3 || n > 12) throw UnknownExample("example_6_1 expects 3 <= n <= 12");
    std::vector<Vec> g;
    g.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) g.emplace_back(Rat(i), Rat(i) * Rat(i), Rat(1));
    return make_generator_set(std::move(g));
}

// l horizontal rows of k points each in the z=1 plane, searched so the rows
// are the only collinear groups. Every generator then has hypergraph degree
// 1 + (l-1)k.
inline GeneratorSet example_6_2(int l, int k) {
    if (l < 2 || k < 2 || l * k > 12)
        throw UnknownExample("example_6_2 expects l,k >= 2 and l*k <= 12");
    for (std::uint64_t attempt = 0; attempt < 256; ++attempt) {
        Rng rng(derive_subseed(620000 + static_cast<std::uint64_t>(l * 16 + k), attempt));
        std::vector<Vec> g;
        for (int row = 0; row < l; ++row) {
            long b = rng.uniform_int(0, 12), d = rng.uniform_int(1, 9);
            for (int i = 0; i < k; ++i)
                g.emplace_back(Rat(b + i * d), Rat(row), Rat(1));
        }
        GeneratorSet gs;
        try {
            gs = make_generator_set(g);
        } catch (const DegenerateInput&) {
            continue;
        }
        GeneratorHypergraph h = coplanarity_hypergraph(gs);
        // For k = 2 a row edge is indistinguishable from a generic pair by
        // size; the degree check below still pins the structure.
        int rows_found = 0;
        bool ok = true;
        for (const auto& e : h.edges) {
            if (k > 2 && static_cast<int>(e.size()) == k)
                ++rows_found;
            else if (e.size() != 2)
                ok = false;
        }
        ok = ok && (k == 2 || rows_found == l);
        for (int d : h.degrees) ok = ok && d == 1 + (l - 1) * k;
        if (ok) return gs;
    }
    throw Error("example_6_2: deterministic search exhausted");
}

// Nine points in the z=1 plane forming a Pappus configuration: nine
// collinear triples, nine leftover pairs, every point on exactly five lines.
inline GeneratorSet example_6_3_pappus() {
    const std::array<std::array<long, 2>, 9> pts{{{0, 0},
                                                  {2, 0},
                                                  {6, 0},
                                                  {0, 2},
                                                  {2, 2},
                                                  {6, 2},
                                                  {1, 1},
                                                  {3, 1},
                                                  {4, 1}}};
    std::vector<Vec> g;
    g.reserve(9);
    for (const auto& p : pts) g.emplace_back(Rat(p[0]), Rat(p[1]), Rat(1));
    return make_generator_set(std::move(g));
}

// random generators in general position: nonzero, pairwise non-parallel, no
// coplanar triple
inline GeneratorSet generic_zonotope(int n, std::uint64_t seed) {
    if (n < 3 || n > 12) throw UnknownExample("generic_zonotope expects 3 <= n <= 12");
    Rng rng(seed);
    std::vector<Vec> g;
    int guard = 0;
    while (static_cast<int>(g.size()) < n) {
        if (++guard > 100000) throw Error("generic_zonotope: rejection sampling stalled");
        Vec v(Rat(rng.uniform_int(-9, 9)), Rat(rng.uniform_int(-9, 9)), Rat(rng.uniform_int(-9, 9)));
        if (v.is_zero()) continue;
        bool ok = true;
        for (const Vec& u : g)
            if (parallel(u, v)) ok = false;
        for (size_t i = 0; i < g.size() && ok; ++i)
            for (size_t j = i + 1; j < g.size() && ok; ++j)
                if (dot(v, cross(g[i], g[j])) == 0) ok = false;
        if (ok) g.push_back(v);
    }
    return make_generator_set(std::move(g));
}

inline Polytope unit_cube() {
    std::vector<Vec> pts;
    for (int i = 0; i < 8; ++i)
        pts.emplace_back(Rat(i & 1), Rat((i >> 1) & 1), Rat((i >> 2) & 1));
    return convex_hull(pts, 3);
}

inline BuiltinExample builtin_example(const std::string& name, const ExampleParams& prm = {}) {
    BuiltinExample out;
    out.name = name;
    if (name == "cube") {
        out.polytope = unit_cube();
    } else if (name == "generic_zonotope") {
        out.generators = generic_zonotope(prm.n.value_or(5), prm.seed.value_or(1));
    } else if (name == "example_5_1") {
        out.polytope = example_5_1();
    } else if (name == "example_5_2") {
        out.polytope = example_5_2(prm.k.value_or(3));
    } else if (name == "example_5_3") {
        out.polytope = example_5_3();
    } else if (name == "example_6_1") {
        out.generators = example_6_1(prm.n.value_or(5));
    } else if (name == "example_6_2") {
        out.generators = example_6_2(prm.l.value_or(3), prm.k.value_or(4));
    } else if (name == "example_6_3_pappus") {
        out.generators = example_6_3_pappus();
    } else {
        throw UnknownExample("unknown example \"" + name + "\"");
    }
    return out;
}

} // namespace sectavg
