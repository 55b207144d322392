#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "sectavg/polytope.hpp"

namespace sectavg {
namespace detail {

// ---- 2D chain hull on exact coordinates ------------------------------------

template <class T>
int turn_sign(const std::array<T, 2>& o, const std::array<T, 2>& a, const std::array<T, 2>& b) {
    T v = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    return v.sign();
}

// Monotone chain on pairwise distinct points. Returns indices of the extreme
// points in counterclockwise order (y axis up); collinear interior points are
// dropped. A collinear input yields just the two endpoints.
template <class T>
std::vector<int> hull2d_indices(const std::vector<std::array<T, 2>>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return pts[static_cast<size_t>(a)] < pts[static_cast<size_t>(b)];
    });
    if (n <= 2) return idx;
    std::vector<int> h(static_cast<size_t>(2 * n));
    int k = 0;
    for (int ii = 0; ii < n; ++ii) { // lower chain
        int i = idx[static_cast<size_t>(ii)];
        while (k >= 2 && turn_sign(pts[static_cast<size_t>(h[static_cast<size_t>(k - 2)])],
                                   pts[static_cast<size_t>(h[static_cast<size_t>(k - 1)])],
                                   pts[static_cast<size_t>(i)]) <= 0)
            --k;
        h[static_cast<size_t>(k++)] = i;
    }
    const int lower = k + 1;
    for (int ii = n - 2; ii >= 0; --ii) { // upper chain
        int i = idx[static_cast<size_t>(ii)];
        while (k >= lower && turn_sign(pts[static_cast<size_t>(h[static_cast<size_t>(k - 2)])],
                                       pts[static_cast<size_t>(h[static_cast<size_t>(k - 1)])],
                                       pts[static_cast<size_t>(i)]) <= 0)
            --k;
        h[static_cast<size_t>(k++)] = i;
    }
    h.resize(static_cast<size_t>(k - 1));
    return h;
}

// ---- exact predicates on integer points ------------------------------------

inline IVec isub(const IVec& a, const IVec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline IVec icross(const IVec& a, const IVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Int idot(const IVec& a, const IVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline int orient3d(const IVec& a, const IVec& b, const IVec& c, const IVec& d) {
    return idot(icross(isub(b, a), isub(c, a)), isub(d, a)).sign();
}

inline bool ivec_is_zero(const IVec& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// ---- incremental 3D hull ----------------------------------------------------

struct HullFace {
    int a, b, c;
    bool alive = true;
};

// Wrapped hull of full-rank integer points. i0..i3 index an affinely
// independent start simplex. Points already inside are skipped; a point on
// the current boundary only replaces faces when it is strictly outside some
// face, so the face set always describes the hull of the points seen so far.
inline std::vector<HullFace> incremental_hull3(const std::vector<IVec>& p, int i0, int i1, int i2,
                                               int i3) {
    std::vector<HullFace> faces;
    auto tetra_face = [&](int a, int b, int c, int d) {
        if (orient3d(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)], p[static_cast<size_t>(c)],
                     p[static_cast<size_t>(d)]) > 0)
            std::swap(b, c);
        faces.push_back({a, b, c});
    };
    tetra_face(i0, i1, i2, i3);
    tetra_face(i0, i1, i3, i2);
    tetra_face(i0, i2, i3, i1);
    tetra_face(i1, i2, i3, i0);

    const int n = static_cast<int>(p.size());
    std::vector<int> sgn;
    for (int pi = 0; pi < n; ++pi) {
        if (pi == i0 || pi == i1 || pi == i2 || pi == i3) continue;
        sgn.assign(faces.size(), -2);
        bool strict = false;
        for (size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].alive) continue;
            sgn[f] = orient3d(p[static_cast<size_t>(faces[f].a)], p[static_cast<size_t>(faces[f].b)],
                              p[static_cast<size_t>(faces[f].c)], p[static_cast<size_t>(pi)]);
            if (sgn[f] > 0) strict = true;
        }
        if (!strict) continue; // inside or on the boundary

        std::map<std::pair<int, int>, size_t> owner; // directed edge -> alive face
        for (size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].alive) continue;
            owner[{faces[f].a, faces[f].b}] = f;
            owner[{faces[f].b, faces[f].c}] = f;
            owner[{faces[f].c, faces[f].a}] = f;
        }
        // coplanar faces fall with the visible ones: sign 0 joins the cut
        std::vector<std::pair<int, int>> horizon;
        for (size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].alive || sgn[f] < 0) continue;
            faces[f].alive = false;
            const int vs[3] = {faces[f].a, faces[f].b, faces[f].c};
            for (int e = 0; e < 3; ++e) {
                int u = vs[e], v = vs[(e + 1) % 3];
                auto tw = owner.find({v, u});
                if (tw == owner.end()) throw Error("hull: open surface");
                size_t g = tw->second;
                if (sgn[g] < 0) horizon.emplace_back(u, v);
            }
        }
        if (horizon.empty()) throw Error("hull: empty horizon for an outside point");
        for (auto [u, v] : horizon) faces.push_back({u, v, pi});
    }
    faces.erase(std::remove_if(faces.begin(), faces.end(), [](const HullFace& f) { return !f.alive; }),
                faces.end());
    return faces;
}

// groups hull triangles by their oriented plane and replaces each group by
// one convex cycle, so facets become the maximal faces
inline std::vector<std::vector<int>> merge_coplanar(const std::vector<IVec>& p,
                                                    const std::vector<HullFace>& faces) {
    std::map<std::array<Int, 4>, std::set<int>> planes; // reduced (normal, offset) -> vertex ids
    for (const HullFace& f : faces) {
        IVec n = icross(isub(p[static_cast<size_t>(f.b)], p[static_cast<size_t>(f.a)]),
                        isub(p[static_cast<size_t>(f.c)], p[static_cast<size_t>(f.a)]));
        Int g = gcd(gcd(abs(n[0]), abs(n[1])), abs(n[2]));
        for (Int& x : n) x /= g;
        Int off = idot(n, p[static_cast<size_t>(f.a)]);
        auto& verts = planes[{n[0], n[1], n[2], off}];
        verts.insert(f.a);
        verts.insert(f.b);
        verts.insert(f.c);
    }
    std::vector<std::vector<int>> facets;
    for (const auto& [key, verts] : planes) {
        const IVec n{key[0], key[1], key[2]};
        // project away the dominant normal axis, hull in the plane
        int drop = 0;
        for (int i = 1; i < 3; ++i)
            if (abs(n[static_cast<size_t>(i)]) > abs(n[static_cast<size_t>(drop)])) drop = i;
        std::vector<int> ids(verts.begin(), verts.end());
        std::vector<std::array<Int, 2>> flat;
        flat.reserve(ids.size());
        for (int id : ids) {
            const IVec& q = p[static_cast<size_t>(id)];
            std::array<Int, 2> xy;
            int k = 0;
            for (int i = 0; i < 3; ++i)
                if (i != drop) xy[static_cast<size_t>(k++)] = q[static_cast<size_t>(i)];
            flat.push_back(xy);
        }
        auto cyc = hull2d_indices(flat);
        if (cyc.size() < 3) throw Error("hull: merged facet degenerated");
        std::vector<int> facet;
        facet.reserve(cyc.size());
        for (int i : cyc) facet.push_back(ids[static_cast<size_t>(i)]);
        // orient the cycle outward: its area vector must align with n
        IVec area{Int(0), Int(0), Int(0)};
        for (size_t i = 0; i < facet.size(); ++i) {
            const IVec& u = p[static_cast<size_t>(facet[i])];
            const IVec& v = p[static_cast<size_t>(facet[(i + 1) % facet.size()])];
            IVec cr = icross(u, v);
            for (int k = 0; k < 3; ++k) area[static_cast<size_t>(k)] += cr[static_cast<size_t>(k)];
        }
        int s = idot(area, n).sign();
        if (s == 0) throw Error("hull: facet area vector orthogonal to its plane");
        if (s < 0) std::reverse(facet.begin(), facet.end());
        facets.push_back(std::move(facet));
    }
    return facets;
}

inline Polytope assemble_polygon(int dim, const std::vector<Vec>& pts, std::vector<int> cycle) {
    Polytope out;
    out.dim = dim;
    out.rank = 2;
    std::vector<int> remap(pts.size(), -1);
    for (size_t i = 0; i < cycle.size(); ++i) {
        remap[static_cast<size_t>(cycle[i])] = static_cast<int>(i);
        out.vertices.push_back(pts[static_cast<size_t>(cycle[i])]);
    }
    std::vector<int> cyc(cycle.size());
    std::iota(cyc.begin(), cyc.end(), 0);
    out.facets.push_back(cyc);
    out.edges = edges_of_cycle(cyc);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

} // namespace detail

// Convex hull of exact points; accepts degenerate spans and reports what it
// found through rank (1 segment, 2 polygon, 3 solid). Duplicates are fine.
inline Polytope convex_hull_any_rank(const std::vector<Vec>& input, int dim) {
    if (dim != 2 && dim != 3) throw UnsupportedDimension("hull: dim must be 2 or 3");
    std::vector<Vec> pts;
    {
        std::set<std::array<Rat, 3>> seen;
        for (const Vec& v : input) {
            if (v.dim != dim) throw DegenerateInput("hull: point dimension mismatch");
            if (seen.insert(v.c).second) pts.push_back(v);
        }
    }
    if (pts.size() < 2) throw DegenerateInput("hull: needs at least two distinct points");

    // common integer grid for the exact predicates
    Int l(1);
    for (const Vec& v : pts)
        for (int i = 0; i < dim; ++i) l = lcm(l, rat_den(v[i]));
    std::vector<IVec> ip(pts.size(), IVec{Int(0), Int(0), Int(0)});
    for (size_t i = 0; i < pts.size(); ++i)
        for (int k = 0; k < dim; ++k)
            ip[i][static_cast<size_t>(k)] = rat_num(pts[i][k]) * (l / rat_den(pts[i][k]));

    const int n = static_cast<int>(pts.size());
    // affine rank witnesses
    int w1 = -1, w2 = -1, w3 = -1;
    for (int i = 1; i < n && w1 < 0; ++i)
        if (!(ip[static_cast<size_t>(i)] == ip[0])) w1 = i;
    for (int i = 1; i < n && w2 < 0; ++i)
        if (!detail::ivec_is_zero(
                detail::icross(detail::isub(ip[static_cast<size_t>(w1)], ip[0]),
                               detail::isub(ip[static_cast<size_t>(i)], ip[0]))))
            w2 = i;
    if (dim == 3 && w2 >= 0)
        for (int i = 1; i < n && w3 < 0; ++i)
            if (detail::orient3d(ip[0], ip[static_cast<size_t>(w1)], ip[static_cast<size_t>(w2)],
                                 ip[static_cast<size_t>(i)]) != 0)
                w3 = i;

    Polytope out;
    if (w2 < 0) { // all points on one line: keep the two extremes
        IVec d = detail::isub(ip[static_cast<size_t>(w1)], ip[0]);
        int lo = 0, hi = 0;
        Int tlo(0), thi(0);
        for (int i = 1; i < n; ++i) {
            Int t = detail::idot(d, detail::isub(ip[static_cast<size_t>(i)], ip[0]));
            if (t < tlo) tlo = t, lo = i;
            if (t > thi) thi = t, hi = i;
        }
        out.dim = dim;
        out.rank = 1;
        Vec a = pts[static_cast<size_t>(lo)], b = pts[static_cast<size_t>(hi)];
        if (b < a) std::swap(a, b);
        out.vertices = {a, b};
        out.edges = {{0, 1}};
        out.check_geometry();
        return out;
    }
    if (dim == 2) {
        std::vector<std::array<Rat, 2>> flat;
        flat.reserve(pts.size());
        for (const Vec& v : pts) flat.push_back({v[0], v[1]});
        out = detail::assemble_polygon(2, pts, detail::hull2d_indices(flat));
        out.check_geometry();
        return out;
    }
    if (w3 < 0) { // coplanar in 3D: hull in exact plane coordinates
        IVec u = detail::isub(ip[static_cast<size_t>(w1)], ip[0]);
        IVec nrm = detail::icross(u, detail::isub(ip[static_cast<size_t>(w2)], ip[0]));
        IVec w = detail::icross(nrm, u);
        std::vector<std::array<Int, 2>> flat;
        flat.reserve(pts.size());
        for (const IVec& q : ip) {
            IVec r = detail::isub(q, ip[0]);
            flat.push_back({detail::idot(u, r), detail::idot(w, r)});
        }
        out = detail::assemble_polygon(3, pts, detail::hull2d_indices(flat));
        out.check_geometry();
        return out;
    }

    auto faces = detail::incremental_hull3(ip, 0, w1, w2, w3);
    auto raw_facets = detail::merge_coplanar(ip, faces);
    // keep only vertices that survive on some facet, in input order
    std::set<int> used;
    for (const auto& f : raw_facets) used.insert(f.begin(), f.end());
    std::vector<int> remap(pts.size(), -1);
    out.dim = 3;
    out.rank = 3;
    for (int id : used) {
        remap[static_cast<size_t>(id)] = out.vertex_count();
        out.vertices.push_back(pts[static_cast<size_t>(id)]);
    }
    for (auto& f : raw_facets) {
        for (int& id : f) id = remap[static_cast<size_t>(id)];
        out.facets.push_back(std::move(f));
    }
    out.edges = edges_from_facets(out.facets);
    out.check_geometry();
    return out;
}

// hull that must be full-dimensional
inline Polytope convex_hull(const std::vector<Vec>& input, int dim) {
    Polytope p = convex_hull_any_rank(input, dim);
    if (p.rank != dim)
        throw DegenerateInput("hull: points span only rank " + std::to_string(p.rank));
    return p;
}

} // namespace sectavg
