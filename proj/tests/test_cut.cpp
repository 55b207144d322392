#include <doctest.h>

#include "helpers.hpp"
#include "sectavg/cut.hpp"

using namespace testutil;

namespace {

// Oracle: clip by re-hulling kept vertices plus exact edge crossings. Slower
// and structurally independent of the facet-walking implementation.
Polytope rehull_cut(const Polytope& p, const Vec& z, const Rat& t, Side side) {
    std::vector<Vec> pts;
    int flip = side == Side::below ? 1 : -1;
    for (const Vec& v : p.vertices) {
        int s = sign_of(dot(z, v) - t) * flip;
        if (s == 0) throw NonGenericCut("oracle: vertex on the plane");
        if (s < 0) pts.push_back(v);
    }
    for (const auto& e : p.edges) {
        Rat sa = dot(z, p.vertex(e[0])) - t;
        Rat sb = dot(z, p.vertex(e[1])) - t;
        if (sign_of(sa) * sign_of(sb) < 0) {
            Rat w = sa / (sa - sb);
            pts.push_back(p.vertex(e[0]) + w * (p.vertex(e[1]) - p.vertex(e[0])));
        }
    }
    return convex_hull(pts, p.dim);
}

void compare_with_oracle(const Polytope& p, const Vec& z, const Rat& t) {
    for (Side side : {Side::below, Side::above}) {
        Polytope fast = cut_halfspace(p, z, t, side);
        Polytope slow = rehull_cut(p, z, t, side);
        CHECK(sorted_vertices(fast) == sorted_vertices(slow));
        CHECK(fast.volume() == slow.volume());
        CHECK(fast.edge_count() == slow.edge_count());
        CHECK(fast.facet_count() == slow.facet_count());
        CHECK_NOTHROW(fast.check_geometry());
    }
}

} // namespace

TEST_CASE("frozen cuts of cube and tetrahedron") {
    Polytope c = cube01();
    Polytope below = cut_halfspace(c, v3(1, 1, 1), Rat(1, 2), Side::below);
    CHECK(below.vertex_count() == 4);
    CHECK(below.volume() == Rat(1, 48));
    Polytope above = cut_halfspace(c, v3(1, 1, 1), Rat(1, 2), Side::above);
    CHECK(above.vertex_count() == 10);
    CHECK(above.volume() == Rat(47, 48));

    Polytope t = tetrahedron();
    Polytope tb = cut_halfspace(t, v3(1, 1, 0), Rat(1, 2), Side::below);
    CHECK(tb.vertex_count() == 6);
    CHECK_NOTHROW(tb.check_geometry());
}

TEST_CASE("2D cuts split polygons exactly") {
    Polytope sq = convex_hull({v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2)}, 2);
    Polytope half = cut_halfspace(sq, v2(1, 1), Rat(1), Side::below);
    CHECK(half.vertex_count() == 3);
    CHECK(half.volume() == Rat(1, 2));
    CutPieces pieces = cut_both_sides(sq, v2(1, 1), Rat(1));
    CHECK(pieces.k_star == 2);
    CHECK(pieces.below.volume() + pieces.above.volume() == sq.volume());
}

TEST_CASE("cut errors: vertex hits and empty sides") {
    Polytope c = cube01();
    CHECK_THROWS_AS(cut_halfspace(c, v3(0, 0, 1), Rat(0), Side::below), NonGenericCut);
    CHECK_THROWS_AS(cut_halfspace(c, v3(1, 1, 1), Rat(1), Side::below), NonGenericCut);
    CHECK_THROWS_AS(cut_halfspace(c, v3(0, 0, 1), Rat(5), Side::above), EmptySide);
    CHECK_THROWS_AS(cut_halfspace(c, v3(0, 0, 1), Rat(-5), Side::below), EmptySide);
    CHECK_THROWS_AS(cut_halfspace(c, Vec(Rat(0), Rat(0), Rat(0)), Rat(1), Side::below),
                    ZeroDirection);
}

TEST_CASE("random cuts agree with the re-hull oracle") {
    Rng rng(404);
    int done = 0;
    while (done < 40) {
        Polytope p = done % 3 == 2 ? random_hull(rng, 2, 7) : random_hull(rng, 3, 10);
        Vec z = random_sphere_direction(rng, p.dim, 10);
        SupportInterval s = support_interval(p, z);
        Rat t = s.t_minus + rng.dyadic_unit(16) * s.width();
        try {
            compare_with_oracle(p, z, t);
        } catch (const NonGenericCut&) {
            continue;
        }
        ++done;
    }
}

TEST_CASE("both sides bookkeeping on random bodies") {
    Rng rng(515);
    int done = 0;
    while (done < 30) {
        Polytope p = random_hull(rng, 3, 9);
        Vec z = random_sphere_direction(rng, 3, 10);
        SupportInterval s = support_interval(p, z);
        Rat t = s.t_minus + rng.dyadic_unit(16) * s.width();
        CutPieces pieces;
        try {
            pieces = cut_both_sides(p, z, t);
        } catch (const NonGenericCut&) {
            continue;
        }
        CHECK(pieces.below.vertex_count() + pieces.above.vertex_count() ==
              p.vertex_count() + 2 * pieces.k_star);
        CHECK(pieces.k_star == slice_vertex_count(p, z, t));
        CHECK(pieces.below.volume() + pieces.above.volume() == p.volume());
        ++done;
    }
}
