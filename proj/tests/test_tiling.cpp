#include <doctest.h>

#include "helpers.hpp"
#include "sectavg/section.hpp"
#include "sectavg/tiling.hpp"

using namespace testutil;

TEST_CASE("grid planes canonicalize jointly") {
    GridPlane a = make_grid_plane(v3(2, 4, 6), Rat(2));
    CHECK(a.normal == IVec{Int(1), Int(2), Int(3)});
    CHECK(a.offset == Rat(1));
    CHECK(plane_contains_lattice_point(a));

    GridPlane b = make_grid_plane(v3(-1, -2, -3), Rat(1, 2));
    CHECK(b.normal == IVec{Int(1), Int(2), Int(3)});
    CHECK(b.offset == Rat(-1, 2));
    CHECK_FALSE(plane_contains_lattice_point(b));

    GridPlane c = make_grid_plane(Vec(Rat(1, 2), Rat(1, 3), Rat(0)), Rat(5, 6));
    CHECK(c.normal == IVec{Int(3), Int(2), Int(0)});
    CHECK(c.offset == Rat(5));
    CHECK(plane_contains_lattice_point(c));

    CHECK_THROWS_AS(make_grid_plane(Vec(Rat(0), Rat(0), Rat(0)), Rat(1)), ZeroDirection);
}

TEST_CASE("single cube tiles match direct slicing of that cube") {
    // independent oracle: section vertex count of the translated unit cube
    std::vector<GridPlane> planes = {
        make_grid_plane(v3(1, 2, 3), Rat(1, 2)),
        make_grid_plane(v3(1, 1, -1), Rat(1, 3)),
        make_grid_plane(v3(2, -3, 5), Rat(7, 11)),
    };
    for (const GridPlane& g : planes) {
        Vec n(Rat(g.normal[0]), Rat(g.normal[1]), Rat(g.normal[2]));
        for (long a1 = -2; a1 <= 2; ++a1)
            for (long a2 = -2; a2 <= 2; ++a2)
                for (long a3 = -2; a3 <= 2; ++a3) {
                    Tile t = tile_of_cube(g, {Int(a1), Int(a2), Int(a3)});
                    if (t.kind != Tile::Kind::polygon || t.lattice_vertex) continue;
                    std::vector<Vec> corners;
                    for (int dx = 0; dx <= 1; ++dx)
                        for (int dy = 0; dy <= 1; ++dy)
                            for (int dz = 0; dz <= 1; ++dz)
                                corners.push_back(v3(a1 + dx, a2 + dy, a3 + dz));
                    Polytope cube = convex_hull(corners, 3);
                    CHECK(t.sides == slice_vertex_count(cube, n, g.offset));
                    CHECK(t.sides >= 3);
                    CHECK(t.sides <= 6);
                }
    }
}

TEST_CASE("axis plane through cell centers tiles into squares") {
    GridPlane g = make_grid_plane(v3(0, 0, 1), Rat(1, 2));
    TilingReport r = tiling_average(g, 3);
    CHECK(r.tiles == 36);
    CHECK(r.side_counts[1] == 36);
    CHECK(r.average == Rat(4));
    CHECK(r.degenerate == 0);
    CHECK(r.lattice_vertex_tiles == 0);
}

TEST_CASE("axis plane on the lattice counts each face once") {
    GridPlane g = make_grid_plane(v3(0, 0, 1), Rat(0));
    TilingReport r = tiling_average(g, 3);
    CHECK(r.tiles == 36);
    CHECK(r.average == Rat(4));
    CHECK(r.degenerate == 36); // the touching cubes above the plane
    CHECK(r.lattice_vertex_tiles == 36);
}

TEST_CASE("vertical plane repeats its column tile") {
    GridPlane g = make_grid_plane(v3(1, 0, 0), Rat(1, 2));
    TilingReport r = tiling_average(g, 4);
    CHECK(r.tiles == 8 * 8);
    CHECK(r.side_counts[1] == r.tiles);
    CHECK(r.average == Rat(4));
    GridPlane diag = make_grid_plane(v3(1, -1, 0), Rat(1, 3));
    TilingReport rd = tiling_average(diag, 4);
    CHECK(rd.tiles > 0);
    CHECK(rd.average == Rat(4));
}

TEST_CASE("the all-triangle plane averages exactly 3") {
    GridPlane g = make_grid_plane(v3(1, 1, -1), Rat(0));
    TilingReport r = tiling_average(g, 6);
    CHECK(r.tiles == r.side_counts[0]);
    CHECK(r.average == Rat(3));
    CHECK(r.lattice_vertex_tiles == r.tiles); // every triangle leans on a lattice point
}

TEST_CASE("lattice-free plane heads toward 4") {
    GridPlane g = make_grid_plane(v3(1, 2, 3), Rat(1, 2));
    std::vector<TilingReport> series = tiling_convergence(g, {5, 10, 20});
    Rat prev;
    bool first = true;
    for (const TilingReport& r : series) {
        CHECK(r.tiles > 0);
        CHECK(r.lattice_vertex_tiles == 0);
        Rat err = abs(r.average - Rat(4));
        if (!first) CHECK(err < prev);
        prev = err;
        first = false;
    }
    CHECK(prev < Rat(1, 4));
}

TEST_CASE("windows far from the plane raise NoTiles") {
    GridPlane g = make_grid_plane(v3(0, 0, 1), Rat(1000, 7));
    CHECK_THROWS_AS(tiling_average(g, 3), NoTiles);
    CHECK_THROWS_AS(tiling_convergence(g, {3, 2}), DegenerateInput);
    CHECK_THROWS_AS(tiling_average(g, 0), DegenerateInput);
}
