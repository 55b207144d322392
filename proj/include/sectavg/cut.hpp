#pragma once

#include <map>
#include <vector>

#include "sectavg/section.hpp"

namespace sectavg {

enum class Side { below, above };

namespace detail {

// Clips the face cycles directly instead of re-hulling the kept points: the
// cut is generic (no vertex on the plane), so every crossed facet cycle
// splits into one kept arc plus two crossing points, and the crossing points
// chain into a single convex cut facet.
inline Polytope cut_solid(const Polytope& p, const Vec& z, const Rat& t, Side side) {
    const int nv = p.vertex_count();
    std::vector<Rat> s(static_cast<size_t>(nv));
    std::vector<bool> keep(static_cast<size_t>(nv));
    int kept_n = 0;
    for (int i = 0; i < nv; ++i) {
        s[static_cast<size_t>(i)] = dot(z, p.vertex(i)) - t;
        int sg = sign_of(s[static_cast<size_t>(i)]);
        if (sg == 0) throw NonGenericCut("cut plane passes through a vertex");
        keep[static_cast<size_t>(i)] = side == Side::below ? sg < 0 : sg > 0;
        if (keep[static_cast<size_t>(i)]) ++kept_n;
    }
    if (kept_n == 0 || kept_n == nv)
        throw EmptySide("cut level outside the open support interval");

    Polytope out;
    out.dim = p.dim;
    out.rank = p.rank;
    std::vector<int> remap(static_cast<size_t>(nv), -1);
    for (int i = 0; i < nv; ++i)
        if (keep[static_cast<size_t>(i)]) {
            remap[static_cast<size_t>(i)] = out.vertex_count();
            out.vertices.push_back(p.vertex(i));
        }
    std::map<std::array<int, 2>, int> crossing; // original edge -> new vertex id
    auto cross_id = [&](int a, int b) {
        std::array<int, 2> key{std::min(a, b), std::max(a, b)};
        auto it = crossing.find(key);
        if (it != crossing.end()) return it->second;
        const Rat&sa = s[static_cast<size_t>(a)], &sb = s[static_cast<size_t>(b)];
        Vec x = (Rat(1) / (sa - sb)) * (sa * p.vertex(b) - sb * p.vertex(a));
        int id = out.vertex_count();
        out.vertices.push_back(x);
        crossing.emplace(key, id);
        return id;
    };

    if (p.rank == 2) { // polygon in the plane: clip the single cycle
        const auto& cyc = p.facets[0];
        const int k = static_cast<int>(cyc.size());
        std::vector<int> walk;
        for (int i = 0; i < k; ++i) {
            int a = cyc[static_cast<size_t>(i)], b = cyc[static_cast<size_t>((i + 1) % k)];
            if (keep[static_cast<size_t>(a)]) walk.push_back(remap[static_cast<size_t>(a)]);
            if (keep[static_cast<size_t>(a)] != keep[static_cast<size_t>(b)])
                walk.push_back(cross_id(a, b));
        }
        out.facets.push_back(walk);
        out.edges = edges_of_cycle(walk);
        std::sort(out.edges.begin(), out.edges.end());
        out.check_structure();
        return out;
    }

    // rank 3
    std::map<int, int> chord_next; // cut facet: enter crossing -> exit crossing
    for (const auto& f : p.facets) {
        const int k = static_cast<int>(f.size());
        bool any_keep = false, any_drop = false;
        for (int v : f)
            (keep[static_cast<size_t>(v)] ? any_keep : any_drop) = true;
        if (!any_keep) continue;
        if (!any_drop) {
            std::vector<int> g;
            g.reserve(f.size());
            for (int v : f) g.push_back(remap[static_cast<size_t>(v)]);
            out.facets.push_back(std::move(g));
            continue;
        }
        std::vector<int> walk;
        int enter = -1, exit = -1;
        for (int i = 0; i < k; ++i) {
            int a = f[static_cast<size_t>(i)], b = f[static_cast<size_t>((i + 1) % k)];
            if (keep[static_cast<size_t>(a)]) walk.push_back(remap[static_cast<size_t>(a)]);
            if (keep[static_cast<size_t>(a)] != keep[static_cast<size_t>(b)]) {
                int x = cross_id(a, b);
                walk.push_back(x);
                if (keep[static_cast<size_t>(a)])
                    exit = x; // leaving the kept side
                else
                    enter = x; // returning to it
            }
        }
        if (enter < 0 || exit < 0 || enter == exit)
            throw Error("cut: facet does not cross the plane cleanly");
        chord_next.emplace(enter, exit);
        out.facets.push_back(std::move(walk));
    }
    // walk the chords into the single cut facet; its directed edges run
    // enter -> exit, pairing with the exit -> enter edges of the clipped
    // facets so the surface stays consistently oriented
    if (chord_next.size() < 3) throw Error("cut: fewer than three crossed facets");
    std::vector<int> cutf;
    int start = chord_next.begin()->first;
    int cur = start;
    do {
        cutf.push_back(cur);
        auto it = chord_next.find(cur);
        if (it == chord_next.end()) throw Error("cut: crossing chain broke");
        cur = it->second;
    } while (cur != start && cutf.size() <= chord_next.size());
    if (cur != start || cutf.size() != chord_next.size())
        throw Error("cut: crossing chain did not close into one cycle");
    out.facets.push_back(std::move(cutf));
    out.edges = edges_from_facets(out.facets);
    out.check_structure();
    if (sign_of(out.volume()) <= 0) throw Error("cut: nonpositive volume");
    return out;
}

} // namespace detail

// Exact intersection of a solid polytope with a generic closed halfspace
// (below keeps z.x <= t, above keeps z.x >= t).
inline Polytope cut_halfspace(const Polytope& p, const Vec& z, const Rat& t, Side side) {
    if (z.dim != p.dim) throw DegenerateInput("direction dimension mismatch");
    if (z.is_zero()) throw ZeroDirection("cut along the zero direction");
    if (p.rank != p.dim) throw DegenerateInput("cut needs a full-dimensional polytope");
    return detail::cut_solid(p, z, t, side);
}

struct CutPieces {
    Polytope below, above;
    int k_star = 0; // vertices of the section polygon = edges crossed
};

inline CutPieces cut_both_sides(const Polytope& p, const Vec& z, const Rat& t) {
    CutPieces r;
    r.below = cut_halfspace(p, z, t, Side::below);
    r.above = cut_halfspace(p, z, t, Side::above);
    r.k_star = slice_vertex_count(p, z, t);
    return r;
}

} // namespace sectavg
