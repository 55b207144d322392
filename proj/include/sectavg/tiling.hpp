#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "sectavg/hull.hpp"
#include "sectavg/polytope.hpp"

namespace sectavg {

// Plane n.x = c against the unit cube grid, stored canonically: integer
// normal with gcd 1 and positive leading entry, offset scaled to match.
struct GridPlane {
    IVec normal{Int(0), Int(0), Int(0)};
    Rat offset;
};

inline GridPlane make_grid_plane(const Vec& n, const Rat& c) {
    if (n.dim != 3) throw UnsupportedDimension("grid planes live in dimension 3");
    if (n.is_zero()) throw ZeroDirection("grid plane needs a nonzero normal");
    Int l(1);
    for (int i = 0; i < 3; ++i) l = lcm(l, rat_den(n[i]));
    IVec nn;
    for (int i = 0; i < 3; ++i) nn[i] = rat_num(n[i]) * (l / rat_den(n[i]));
    Int g(0);
    for (int i = 0; i < 3; ++i) g = gcd(g, nn[i]);
    Rat c2 = c * Rat(l, g);
    for (int i = 0; i < 3; ++i) nn[i] /= g;
    for (int i = 0; i < 3; ++i) {
        if (nn[i] == 0) continue;
        if (nn[i] < 0) {
            for (int k = 0; k < 3; ++k) nn[k] = -nn[k];
            c2 = -c2;
        }
        break;
    }
    return GridPlane{nn, c2};
}

// With gcd(normal) = 1 the values normal.x over x in Z^3 are exactly Z, so
// the plane meets the lattice iff the canonical offset is an integer.
inline bool plane_contains_lattice_point(const GridPlane& g) {
    return rat_den(g.offset) == 1;
}

struct Tile {
    enum class Kind { empty, degenerate, polygon };
    Kind kind = Kind::empty;
    int sides = 0;
    bool lattice_vertex = false; // some cube corner lies on the plane
    std::vector<Vec> vertices;
};

namespace tiling_detail {

// corner index bit layout: bit0 = dx, bit1 = dy, bit2 = dz
inline constexpr std::array<std::array<int, 2>, 12> cube_edges = {{
    {0, 1}, {2, 3}, {4, 5}, {6, 7}, // along x
    {0, 2}, {1, 3}, {4, 6}, {5, 7}, // along y
    {0, 4}, {1, 5}, {2, 6}, {3, 7}, // along z
}};

inline Vec corner_point(const std::array<Int, 3>& a, int idx) {
    return Vec(Rat(a[0] + ((idx >> 0) & 1)), Rat(a[1] + ((idx >> 1) & 1)),
               Rat(a[2] + ((idx >> 2) & 1)));
}

} // namespace tiling_detail

// Section of one grid cube by the plane. den(c) * (n.x) - num(c) at the 8
// corners decides everything exactly. Cubes touched only in a vertex, an
// edge, or a face seen from its positive side yield Kind::degenerate so a
// shared face is counted exactly once, from the cube below the plane.
inline Tile tile_of_cube(const GridPlane& g, const std::array<Int, 3>& a) {
    using namespace tiling_detail;
    const Int den = rat_den(g.offset);
    const Int num = rat_num(g.offset);
    std::array<Int, 8> f;
    int pos = 0, neg = 0, zero = 0;
    for (int i = 0; i < 8; ++i) {
        Int s = g.normal[0] * (a[0] + ((i >> 0) & 1)) + g.normal[1] * (a[1] + ((i >> 1) & 1)) +
                g.normal[2] * (a[2] + ((i >> 2) & 1));
        f[i] = den * s - num;
        int sg = sign_of(f[i]);
        if (sg > 0) ++pos;
        else if (sg < 0) ++neg;
        else ++zero;
    }
    Tile t;
    t.lattice_vertex = zero > 0;
    if (pos > 0 && neg > 0) {
        std::vector<Vec> pts;
        for (int i = 0; i < 8; ++i)
            if (f[i] == 0) pts.push_back(corner_point(a, i));
        for (const auto& e : cube_edges) {
            int su = sign_of(f[e[0]]), sv = sign_of(f[e[1]]);
            if (su * sv >= 0) continue;
            Rat s = make_rat(f[e[0]], f[e[0]] - f[e[1]]);
            Vec u = corner_point(a, e[0]), v = corner_point(a, e[1]);
            pts.push_back(u + s * (v - u));
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        int drop = 0;
        Int best(-1);
        for (int i = 0; i < 3; ++i)
            if (abs(g.normal[i]) > best) { best = abs(g.normal[i]); drop = i; }
        std::vector<std::array<Rat, 2>> flat;
        flat.reserve(pts.size());
        for (const Vec& p : pts)
            flat.push_back({p[(drop + 1) % 3], p[(drop + 2) % 3]});
        std::vector<int> cyc = detail::hull2d_indices(flat);
        if (cyc.size() < 3 || cyc.size() > 6)
            throw Error("tile polygon outside the 3..6 range: structural bug");
        t.kind = Tile::Kind::polygon;
        t.sides = static_cast<int>(cyc.size());
        for (int i : cyc) t.vertices.push_back(pts[static_cast<size_t>(i)]);
        return t;
    }
    if (zero == 4 && pos == 0 && neg > 0) {
        t.kind = Tile::Kind::polygon;
        t.sides = 4;
        for (int i = 0; i < 8; ++i)
            if (f[i] == 0) t.vertices.push_back(corner_point(a, i));
        return t;
    }
    t.kind = zero > 0 ? Tile::Kind::degenerate : Tile::Kind::empty;
    return t;
}

struct TilingReport {
    int window = 0;
    std::int64_t tiles = 0;
    std::array<std::int64_t, 4> side_counts{}; // triangles .. hexagons
    std::int64_t degenerate = 0;
    std::int64_t lattice_vertex_tiles = 0;
    Rat average;
};

namespace tiling_detail {

inline void absorb(TilingReport& r, const Tile& t, std::int64_t multiplicity = 1) {
    if (t.kind == Tile::Kind::degenerate) {
        r.degenerate += multiplicity;
        return;
    }
    if (t.kind != Tile::Kind::polygon) return;
    r.tiles += multiplicity;
    r.side_counts[static_cast<size_t>(t.sides - 3)] += multiplicity;
    if (t.lattice_vertex) r.lattice_vertex_tiles += multiplicity;
}

} // namespace tiling_detail

// Average side count of the tiles cut from the grid cubes indexed by
// [-m, m)^3, i.e. the cubes filling the window [-m, m]^3. For a non-vertical
// plane each column contributes the cubes its height bracket meets, clamped
// to the window; a vertical plane repeats one tile per column 2m times,
// which is exact because the pattern is a3-invariant.
inline TilingReport tiling_average(const GridPlane& g, int m) {
    if (m < 1) throw DegenerateInput("window must be positive");
    TilingReport rep;
    rep.window = m;
    const bool vertical = g.normal[2] == 0;
    Int sum_sides(0);
    for (std::int64_t a1 = -m; a1 < m; ++a1) {
        for (std::int64_t a2 = -m; a2 < m; ++a2) {
            if (vertical) {
                // column meets the plane iff the corner values straddle zero
                Rat lo, hi;
                bool first = true;
                for (int dx = 0; dx <= 1; ++dx)
                    for (int dy = 0; dy <= 1; ++dy) {
                        Rat v = Rat(g.normal[0] * (Int(a1) + dx) + g.normal[1] * (Int(a2) + dy));
                        if (first) { lo = hi = v; first = false; }
                        else if (v < lo) lo = v;
                        else if (v > hi) hi = v;
                    }
                if (lo > g.offset || hi < g.offset) continue;
                Tile t = tile_of_cube(g, {Int(a1), Int(a2), Int(0)});
                tiling_detail::absorb(rep, t, 2 * static_cast<std::int64_t>(m));
                if (t.kind == Tile::Kind::polygon)
                    sum_sides += Int(t.sides) * Int(2 * static_cast<std::int64_t>(m));
                continue;
            }
            // heights where the plane crosses the column's four corner lines
            Rat lo, hi;
            bool first = true;
            for (int dx = 0; dx <= 1; ++dx)
                for (int dy = 0; dy <= 1; ++dy) {
                    Rat h = (g.offset - Rat(g.normal[0] * (Int(a1) + dx) +
                                            g.normal[1] * (Int(a2) + dy))) /
                            Rat(g.normal[2]);
                    if (first) { lo = hi = h; first = false; }
                    else if (h < lo) lo = h;
                    else if (h > hi) hi = h;
                }
            Int a3_lo = rat_ceil(lo) - 1, a3_hi = rat_floor(hi);
            if (a3_lo < -m) a3_lo = -m;
            if (a3_hi > m - 1) a3_hi = m - 1;
            for (Int a3 = a3_lo; a3 <= a3_hi; ++a3) {
                Tile t = tile_of_cube(g, {Int(a1), Int(a2), a3});
                tiling_detail::absorb(rep, t);
                if (t.kind == Tile::Kind::polygon) sum_sides += t.sides;
            }
        }
    }
    if (rep.tiles == 0) throw NoTiles("plane misses the window");
    rep.average = Rat(sum_sides, Int(rep.tiles));
    return rep;
}

inline std::vector<TilingReport> tiling_convergence(const GridPlane& g,
                                                    const std::vector<int>& windows) {
    if (windows.empty()) throw DegenerateInput("need at least one window");
    for (size_t i = 1; i < windows.size(); ++i)
        if (windows[i] <= windows[i - 1])
            throw DegenerateInput("windows must increase strictly");
    std::vector<TilingReport> out;
    out.reserve(windows.size());
    for (int m : windows) out.push_back(tiling_average(g, m));
    return out;
}

} // namespace sectavg
