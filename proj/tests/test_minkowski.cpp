#include <doctest.h>

#include "helpers.hpp"
#include "sectavg/minkowski.hpp"
#include "sectavg/section.hpp"

using namespace testutil;

TEST_CASE("sum of a cube with itself is the doubled cube") {
    Polytope c = cube01();
    Polytope s = minkowski_sum(c, c);
    CHECK(s.vertex_count() == 8);
    CHECK(s.volume() == Rat(8));
}

TEST_CASE("sum is commutative and support widths add") {
    Rng rng(808);
    for (int round = 0; round < 6; ++round) {
        Polytope p = random_hull(rng, 3, 7);
        Polytope q = random_hull(rng, 3, 7);
        Polytope pq = minkowski_sum(p, q);
        Polytope qp = minkowski_sum(q, p);
        CHECK(sorted_vertices(pq) == sorted_vertices(qp));
        for (int i = 0; i < 10; ++i) {
            Vec z = random_rational_direction(rng, 3);
            CHECK(support_interval(pq, z).width() ==
                  support_interval(p, z).width() + support_interval(q, z).width());
        }
    }
}

TEST_CASE("segment sums build boxes") {
    Polytope sx = convex_hull_any_rank({v3(0, 0, 0), v3(1, 0, 0)}, 3);
    Polytope sy = convex_hull_any_rank({v3(0, 0, 0), v3(0, 2, 0)}, 3);
    Polytope sz = convex_hull_any_rank({v3(0, 0, 0), v3(0, 0, 3)}, 3);
    Polytope rect = minkowski_sum(sx, sy);
    CHECK(rect.rank == 2);
    CHECK(rect.vertex_count() == 4);
    Polytope box = minkowski_sum(rect, sz);
    CHECK(box.rank == 3);
    CHECK(box.volume() == Rat(6));
}

TEST_CASE("reflection keeps geometry valid in both dimensions") {
    Polytope t = tetrahedron();
    Polytope rt = reflect(t);
    CHECK(rt.volume() == t.volume());
    CHECK_NOTHROW(rt.check_geometry());
    Polytope tri = convex_hull({v2(0, 0), v2(2, 0), v2(0, 2)}, 2);
    Polytope rtri = reflect(tri);
    CHECK(rtri.volume() == tri.volume());
    CHECK_NOTHROW(rtri.check_geometry());
}

TEST_CASE("difference body of the simplex is the cuboctahedron") {
    Polytope d = difference_body(tetrahedron());
    CHECK(d.vertex_count() == 12);
    CHECK(d.edge_count() == 24);
    CHECK(d.facet_count() == 14);
    int tri = 0, sq = 0;
    for (const auto& f : d.facets) {
        if (f.size() == 3) ++tri;
        if (f.size() == 4) ++sq;
    }
    CHECK(tri == 8);
    CHECK(sq == 6);
    CHECK(is_centrally_symmetric(d));
}

TEST_CASE("difference body of a centrally symmetric body is its double") {
    Polytope c = cube01();
    Polytope d = difference_body(c);
    CHECK(d.vertex_count() == 8);
    CHECK(d.volume() == Rat(8));
}
