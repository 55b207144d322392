#include <doctest.h>

#include "helpers.hpp"
#include "sectavg/section.hpp"

using namespace testutil;

TEST_CASE("support interval of the cube") {
    Polytope c = cube01();
    SupportInterval s = support_interval(c, v3(1, 1, 1));
    CHECK(s.t_minus == Rat(0));
    CHECK(s.t_plus == Rat(3));
    CHECK(s.width() == Rat(3));
    SupportInterval sz = support_interval(c, v3(0, 0, -2));
    CHECK(sz.t_minus == Rat(-2));
    CHECK(sz.t_plus == Rat(0));
    CHECK_THROWS_AS(support_interval(c, Vec(Rat(0), Rat(0), Rat(0))), ZeroDirection);
}

TEST_CASE("edge classes of cube and tetrahedron") {
    EdgeClassPartition cc = edge_classes(cube01());
    CHECK(cc.classes.size() == 3);
    for (const EdgeClass& cl : cc.classes) CHECK(cl.edges.size() == 4);
    EdgeClassPartition tc = edge_classes(tetrahedron());
    CHECK(tc.classes.size() == 6);
    for (const EdgeClass& cl : tc.classes) CHECK(cl.edges.size() == 1);
}

TEST_CASE("slice counts of the cube along the diagonal") {
    Polytope c = cube01();
    Vec z = v3(1, 1, 1);
    CHECK(slice_vertex_count(c, z, Rat(1, 2)) == 3);
    CHECK(slice_vertex_count(c, z, Rat(3, 2)) == 6);
    CHECK(slice_vertex_count(c, z, Rat(5, 2)) == 3);
    CHECK(slice_vertex_count(c, z, Rat(-1)) == 0);
    CHECK(slice_vertex_count(c, z, Rat(4)) == 0);
    CHECK_THROWS_AS(slice_vertex_count(c, z, Rat(1)), NonGenericLevel);
    CHECK_THROWS_AS(slice_vertex_count(c, v3(0, 0, 1), Rat(0)), NonGenericLevel);
}

TEST_CASE("exact averages frozen by hand") {
    Polytope t = tetrahedron();
    CHECK(average_vertices_exact(t, v3(0, 0, 1)) == Rat(3));
    CHECK(average_vertices_exact(t, v3(1, 1, 0)) == Rat(4));
    CHECK(average_vertices_exact(t, v3(2, 1, 1)) == Rat(3));
    Polytope c = cube01();
    CHECK(average_vertices_exact(c, v3(0, 0, 1)) == Rat(4));
    CHECK(average_vertices_exact(c, v3(1, 1, 1)) == Rat(4));
    CHECK(average_vertices_exact(c, v3(3, -5, 7)) == Rat(4));
}

TEST_CASE("2D polygons always average 2") {
    Polytope penta = convex_hull({v2(0, 0), v2(2, 0), v2(3, 2), v2(1, 3), v2(-1, 1)}, 2);
    Rng rng(5);
    for (int i = 0; i < 40; ++i)
        CHECK(average_vertices_exact(penta, random_rational_direction(rng, 2)) == Rat(2));
}

TEST_CASE("zero width is refused for flat bodies") {
    Polytope flat = convex_hull_any_rank(
        {v3(0, 0, 1), v3(2, 0, 1), v3(2, 2, 1), v3(0, 2, 1)}, 3);
    CHECK_THROWS_AS(average_vertices_exact(flat, v3(0, 0, 1)), ZeroWidth);
    CHECK(average_vertices_exact(flat, v3(1, 0, 0)) == Rat(2));
}

TEST_CASE("sweep profile counts agree with direct slicing") {
    Rng rng(31);
    for (int round = 0; round < 10; ++round) {
        Polytope p = round % 2 ? random_hull(rng, 3, 9) : random_hull(rng, 2, 7);
        Vec z = random_rational_direction(rng, p.dim);
        SweepProfile prof = SweepProfile::build(p, z);
        SupportInterval s = support_interval(p, z);
        for (int i = 0; i < 60; ++i) {
            std::uint64_t num = 2 * (rng.u64() % 1024) + 1; // odd, in (0, 2^11)
            int direct;
            try {
                Rat t = s.t_minus + Rat(num, 2048) * s.width();
                direct = slice_vertex_count(p, z, t);
            } catch (const NonGenericLevel&) {
                continue;
            }
            CHECK(prof.count_at_dyadic(num, 11) == direct);
        }
    }
}

TEST_CASE("profile integral reproduces the exact average") {
    // sum of count * segment length over the profile equals A * width
    Rng rng(37);
    for (int round = 0; round < 8; ++round) {
        Polytope p = random_hull(rng, 3, 8);
        Vec z = random_rational_direction(rng, 3);
        SweepProfile prof = SweepProfile::build(p, z);
        Rat integral(0);
        for (size_t i = 0; i + 1 < prof.breaks.size(); ++i)
            integral += Rat(prof.counts[i]) * (prof.breaks[i + 1] - prof.breaks[i]);
        CHECK(integral == average_vertices_exact(p, z));
    }
}

TEST_CASE("sweep estimate brackets the exact value") {
    Polytope c = cube01();
    Vec z = v3(1, 2, 3);
    Rat exact = average_vertices_exact(c, z);
    SweepResult r = average_vertices_sweep(c, z, 40000, 99);
    CHECK(r.samples == 40000);
    CHECK(std::fabs(r.mean - to_double(exact)) <= 4.0 * r.std_error + 1e-9);
    SweepResult r2 = average_vertices_sweep(c, z, 40000, 99);
    CHECK(r.mean == r2.mean); // same seed, same bytes
}

TEST_CASE("spherical mean flags constant bodies exactly") {
    SphericalMean sm = spherical_mean_A(cube01(), 50, 7);
    CHECK(sm.constant_exact);
    CHECK(sm.constant_value == Rat(4));
    CHECK(sm.std_error == 0.0);
    SphericalMean st = spherical_mean_A(tetrahedron(), 200, 7);
    CHECK_FALSE(st.constant_exact);
    CHECK(st.mean > 3.0);
    CHECK(st.mean < 4.0);
}

TEST_CASE("constancy probe: cube yes, tetrahedron no with witnesses") {
    ProbeResult yes = constant_A_probe(cube01(), 32, 3);
    CHECK(yes.constant);
    CHECK(yes.value == Rat(4));
    ProbeResult no = constant_A_probe(tetrahedron(), 64, 3);
    CHECK_FALSE(no.constant);
    CHECK(no.a1 != no.a2);
    CHECK(average_vertices_exact(tetrahedron(), no.z1) == no.a1);
    CHECK(average_vertices_exact(tetrahedron(), no.z2) == no.a2);
}
