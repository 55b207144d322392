#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "sectavg/vec.hpp"

namespace sectavg {

// Convex polytope given by its full face lattice.
//
//  rank 3 (solid in 3D):   facets are outward-oriented vertex cycles, every
//                          undirected edge lies in exactly two of them.
//  rank 2 (polygon):       facets holds the single boundary cycle, counter-
//                          clockwise; in 2D that means positive shoelace area,
//                          in 3D the cycle is counterclockwise about the
//                          normal direction the cycle's area vector defines.
//  rank 1 (segment):       two vertices, one edge, no facets.
//
// Operations never store redundant points: vertices are exactly the extreme
// points. edges holds sorted index pairs.
struct Polytope {
    int dim = 3;
    int rank = 3;
    std::vector<Vec> vertices;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> facets;

    const Vec& vertex(int i) const { return vertices[static_cast<size_t>(i)]; }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int facet_count() const { return static_cast<int>(facets.size()); }

    Vec edge_vector(const std::array<int, 2>& e) const {
        return vertices[static_cast<size_t>(e[1])] - vertices[static_cast<size_t>(e[0])];
    }

    void check_structure() const;
    void check_geometry() const;
    Rat volume() const;
};

inline std::vector<std::array<int, 2>> edges_of_cycle(const std::vector<int>& cycle) {
    std::vector<std::array<int, 2>> out;
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) {
        int a = cycle[static_cast<size_t>(i)], b = cycle[static_cast<size_t>((i + 1) % k)];
        out.push_back({std::min(a, b), std::max(a, b)});
    }
    return out;
}

// derives the sorted edge list of a facet complex; every directed edge must
// occur exactly once, which makes the surface closed and orientable
inline std::vector<std::array<int, 2>> edges_from_facets(const std::vector<std::vector<int>>& facets) {
    std::set<std::array<int, 2>> directed;
    std::set<std::array<int, 2>> undirected;
    for (const auto& f : facets) {
        int k = static_cast<int>(f.size());
        for (int i = 0; i < k; ++i) {
            int a = f[static_cast<size_t>(i)], b = f[static_cast<size_t>((i + 1) % k)];
            if (a == b) throw Error("facet cycle repeats a vertex");
            if (!directed.insert({a, b}).second)
                throw Error("directed edge appears twice across facets");
            undirected.insert({std::min(a, b), std::max(a, b)});
        }
    }
    for (const auto& e : undirected)
        if (!directed.count({e[1], e[0]}))
            throw Error("edge with only one incident facet");
    return {undirected.begin(), undirected.end()};
}

// twice the area vector of a (planar) cycle; valid about any origin
inline Vec cycle_area_vector(const std::vector<Vec>& pts, const std::vector<int>& cycle) {
    Vec a = Vec::zero(3);
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) {
        const Vec& u = pts[static_cast<size_t>(cycle[static_cast<size_t>(i)])];
        const Vec& v = pts[static_cast<size_t>(cycle[static_cast<size_t>((i + 1) % k)])];
        a = a + cross(u, v);
    }
    return a;
}

inline Rat polygon_area2_2d(const std::vector<Vec>& pts, const std::vector<int>& cycle) {
    Rat s(0);
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) {
        const Vec& u = pts[static_cast<size_t>(cycle[static_cast<size_t>(i)])];
        const Vec& v = pts[static_cast<size_t>(cycle[static_cast<size_t>((i + 1) % k)])];
        s += cross2(u, v);
    }
    return s;
}

inline bool is_centrally_symmetric(const std::vector<Vec>& pts) {
    if (pts.empty()) return false;
    int dim = pts[0].dim;
    Vec sum = Vec::zero(dim);
    for (const Vec& p : pts) sum = sum + p;
    // compare against 2c - v with c the vertex centroid; scale by n to stay integral
    Rat n(static_cast<int>(pts.size()));
    std::multiset<std::array<Rat, 3>> seen;
    for (const Vec& p : pts) seen.insert((n * p).c);
    Vec twice_sum = Rat(2) * sum;
    for (const Vec& p : pts) {
        std::array<Rat, 3> mirrored = (twice_sum - n * p).c;
        auto it = seen.find(mirrored);
        if (it == seen.end()) return false;
        seen.erase(it);
    }
    return true;
}

inline bool is_centrally_symmetric(const Polytope& p) { return is_centrally_symmetric(p.vertices); }

inline void Polytope::check_structure() const {
    if (dim != 2 && dim != 3) throw Error("ambient dimension must be 2 or 3");
    if (rank < 1 || rank > dim) throw Error("rank out of range");
    if (vertices.empty()) throw Error("no vertices");
    for (const Vec& v : vertices)
        if (v.dim != dim) throw Error("vertex dimension mismatch");
    {
        std::set<std::array<Rat, 3>> uniq;
        for (const Vec& v : vertices)
            if (!uniq.insert(v.c).second) throw Error("duplicate vertex");
    }
    const int nv = vertex_count();
    for (const auto& e : edges)
        if (e[0] < 0 || e[1] < 0 || e[0] >= nv || e[1] >= nv || e[0] >= e[1])
            throw Error("edge index invalid or unsorted");
    for (const auto& f : facets)
        for (int i : f)
            if (i < 0 || i >= nv) throw Error("facet index out of range");

    if (rank == 1) {
        if (nv != 2 || edges.size() != 1 || !facets.empty())
            throw Error("segment must have 2 vertices, 1 edge, no facets");
        return;
    }
    if (rank == 2) {
        if (facets.size() != 1) throw Error("polygon must store exactly one cycle");
        const auto& cyc = facets[0];
        if (static_cast<int>(cyc.size()) != nv)
            throw Error("polygon cycle must visit every vertex once");
        std::set<int> uniq(cyc.begin(), cyc.end());
        if (static_cast<int>(uniq.size()) != nv) throw Error("polygon cycle repeats a vertex");
        auto want = edges_of_cycle(cyc);
        std::sort(want.begin(), want.end());
        if (want != edges) throw Error("polygon edges do not match its cycle");
        if (dim == 2 && sign_of(polygon_area2_2d(vertices, cyc)) <= 0)
            throw Error("2D polygon cycle must be counterclockwise");
        return;
    }
    // rank 3
    if (facets.size() < 4) throw Error("3-polytope needs at least 4 facets");
    for (const auto& f : facets)
        if (f.size() < 3) throw Error("facet with fewer than 3 vertices");
    auto derived = edges_from_facets(facets);
    if (derived != edges) throw Error("edge list does not match facets");
    const long v = nv, e = static_cast<long>(edges.size()), fc = static_cast<long>(facets.size());
    if (v - e + fc != 2) throw Error("Euler relation V-E+F=2 violated");
    // every vertex of a 3-polytope meets at least three edges
    std::vector<int> deg(static_cast<size_t>(nv), 0);
    for (const auto& ed : edges) {
        ++deg[static_cast<size_t>(ed[0])];
        ++deg[static_cast<size_t>(ed[1])];
    }
    for (int d : deg)
        if (d < 3) throw Error("vertex with degree < 3");
}

inline void Polytope::check_geometry() const {
    check_structure();
    if (rank == 1) {
        if (vertices[0] == vertices[1]) throw Error("degenerate segment");
        return;
    }
    if (rank == 2) {
        const auto& cyc = facets[0];
        const int k = static_cast<int>(cyc.size());
        auto at = [&](int i) -> const Vec& {
            return vertices[static_cast<size_t>(cyc[static_cast<size_t>((i % k + k) % k)])];
        };
        if (dim == 2) {
            for (int i = 0; i < k; ++i)
                if (sign_of(cross2(at(i + 1) - at(i), at(i + 2) - at(i + 1))) <= 0)
                    throw Error("polygon not strictly convex counterclockwise");
            return;
        }
        Vec n = cycle_area_vector(vertices, cyc);
        if (n.is_zero()) throw Error("flat polygon with zero area");
        for (int i = 0; i < k; ++i) {
            if (dot(n, at(i) - at(0)) != 0) throw Error("polygon cycle not planar");
            if (sign_of(dot(n, cross(at(i + 1) - at(i), at(i + 2) - at(i + 1)))) <= 0)
                throw Error("flat polygon not strictly convex");
        }
        return;
    }
    // rank 3: facets planar, strictly convex, outward, pairwise non-coplanar
    // across shared edges; positive enclosed volume
    std::vector<Vec> normals;
    for (const auto& f : facets) {
        Vec n = cycle_area_vector(vertices, f);
        if (n.is_zero()) throw Error("facet with zero area");
        const int k = static_cast<int>(f.size());
        auto at = [&](int i) -> const Vec& {
            return vertices[static_cast<size_t>(f[static_cast<size_t>((i % k + k) % k)])];
        };
        for (int i = 0; i < k; ++i) {
            if (dot(n, at(i) - at(0)) != 0) throw Error("facet cycle not planar");
            if (sign_of(dot(n, cross(at(i + 1) - at(i), at(i + 2) - at(i + 1)))) <= 0)
                throw Error("facet cycle not strictly convex");
        }
        for (const Vec& w : vertices) {
            int s = sign_of(dot(n, w - at(0)));
            if (s > 0) throw Error("vertex strictly above a facet plane");
        }
        normals.push_back(n);
    }
    // facets sharing an edge must span different planes, else merging failed
    std::map<std::array<int, 2>, std::vector<size_t>> by_edge;
    for (size_t fi = 0; fi < facets.size(); ++fi)
        for (const auto& e : edges_of_cycle(facets[fi])) by_edge[e].push_back(fi);
    for (const auto& [e, fs] : by_edge) {
        if (fs.size() != 2) throw Error("edge not shared by exactly two facets");
        if (parallel(normals[fs[0]], normals[fs[1]]))
            throw Error("coplanar facets were not merged");
    }
    if (sign_of(volume()) <= 0) throw Error("nonpositive volume");
}

inline Rat Polytope::volume() const {
    if (rank == 2 && dim == 2) return polygon_area2_2d(vertices, facets[0]) / 2;
    if (rank != 3) throw UnsupportedDimension("volume needs a solid 3-polytope or a 2D polygon");
    Rat six_vol(0);
    for (const auto& f : facets) {
        const Vec& a = vertices[static_cast<size_t>(f[0])];
        for (size_t i = 1; i + 1 < f.size(); ++i) {
            const Vec& b = vertices[static_cast<size_t>(f[i])];
            const Vec& c = vertices[static_cast<size_t>(f[i + 1])];
            six_vol += dot(a, cross(b, c));
        }
    }
    return six_vol / 6;
}

inline Polytope translate(const Polytope& p, const Vec& shift) {
    Polytope r = p;
    for (Vec& v : r.vertices) v = v + shift;
    return r;
}

} // namespace sectavg
