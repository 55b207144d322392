#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sectavg/gallery.hpp"
#include "sectavg/section.hpp"
#include "sectavg/zonotope.hpp"

using namespace testutil;

TEST_CASE("generator set validation") {
    CHECK_THROWS_AS(make_generator_set({}), DegenerateInput);
    CHECK_THROWS_AS(make_generator_set({v3(1, 0, 0), Vec(Rat(0), Rat(0), Rat(0))}),
                    DegenerateInput);
    CHECK_THROWS_AS(make_generator_set({v3(1, 0, 0), v3(-2, 0, 0)}), DegenerateInput);
    CHECK_THROWS_AS(make_generator_set({v2(1, 0), v2(0, 1)}), UnsupportedDimension);
}

TEST_CASE("coordinate generators build the box") {
    GeneratorSet g = make_generator_set({v3(1, 0, 0), v3(0, 2, 0), v3(0, 0, 3)});
    Polytope p = build_zonotope(g);
    CHECK(p.vertex_count() == 8);
    CHECK(p.volume() == Rat(6));
    CHECK(is_zonotope(p));
}

TEST_CASE("rank-deficient and oversized generator sets are refused") {
    CHECK_THROWS_AS(build_zonotope(make_generator_set({v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)})),
                    RankDeficient);
    std::vector<Vec> many;
    for (int i = 1; i <= 13; ++i) many.push_back(v3(1, i, i * i));
    CHECK_THROWS_AS(build_zonotope(make_generator_set(many)), TooManyGenerators);
}

TEST_CASE("hypergraph of generic generators is all pairs") {
    GeneratorSet g = generic_zonotope(5, 999);
    GeneratorHypergraph h = coplanarity_hypergraph(g);
    CHECK(h.n == 5);
    CHECK(h.edges.size() == 10);
    for (const auto& e : h.edges) CHECK(e.size() == 2);
    for (int d : h.degrees) CHECK(d == 4);
    LambdaPrediction pred = predict_lambda(h);
    CHECK(pred.constant);
    CHECK(pred.lambda == 8);
}

TEST_CASE("hypergraph groups coplanar triples") {
    GeneratorSet g = make_generator_set({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(1, 1, 0)});
    GeneratorHypergraph h = coplanarity_hypergraph(g);
    std::set<std::vector<int>> edges(h.edges.begin(), h.edges.end());
    std::set<std::vector<int>> want = {{0, 1, 3}, {0, 2}, {1, 2}, {2, 3}};
    CHECK(edges == want);
    CHECK(h.degrees == std::vector<int>{2, 2, 3, 2});
    CHECK_FALSE(predict_lambda(h).constant);
}

TEST_CASE("zonotope edge classes double the degrees") {
    GeneratorSet g = generic_zonotope(4, 321);
    Polytope p = build_zonotope(g);
    GeneratorHypergraph h = coplanarity_hypergraph(g);
    EdgeClassPartition part = edge_classes(p);
    REQUIRE(part.classes.size() == 4);
    for (int i = 0; i < 4; ++i) {
        IVec dir = canonical_line_direction(g.generators[static_cast<size_t>(i)]);
        bool found = false;
        for (const EdgeClass& cl : part.classes)
            if (cl.direction == dir) {
                found = true;
                CHECK(static_cast<int>(cl.edges.size()) == 2 * h.degrees[static_cast<size_t>(i)]);
            }
        CHECK(found);
    }
}

TEST_CASE("zonotope recognition by facet symmetry") {
    CHECK(is_zonotope(cube01()));
    CHECK_FALSE(is_zonotope(tetrahedron()));
    CHECK_FALSE(is_zonotope(octahedron()));
    CHECK(is_zonotope(build_zonotope(generic_zonotope(5, 52))));
    Polytope square = convex_hull({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}, 2);
    CHECK(is_zonotope(square));
    Polytope tri = convex_hull({v2(0, 0), v2(1, 0), v2(0, 1)}, 2);
    CHECK_FALSE(is_zonotope(tri));
}

TEST_CASE("half-zonotope recognition") {
    CHECK(is_half_zonotope(cube01()));
    CHECK_FALSE(is_half_zonotope(tetrahedron()));
    CHECK_FALSE(is_half_zonotope(octahedron()));
}

TEST_CASE("generator recovery rebuilds the same body up to translation") {
    for (std::uint64_t seed : {11u, 22u, 33u}) {
        GeneratorSet g = generic_zonotope(5, seed);
        Polytope p = build_zonotope(g);
        GeneratorSet back = recover_generators(p);
        REQUIRE(back.generators.size() == 5);
        Polytope q = build_zonotope(back);
        CHECK(q.vertex_count() == p.vertex_count());
        CHECK(q.edge_count() == p.edge_count());
        CHECK(q.volume() == p.volume());
        Rng rng(seed);
        for (int i = 0; i < 8; ++i) {
            Vec z = random_rational_direction(rng, 3);
            CHECK(average_vertices_exact(q, z) == average_vertices_exact(p, z));
            CHECK(support_interval(q, z).width() == support_interval(p, z).width());
        }
    }
}

TEST_CASE("fact check: A equals 2(n-1) for generic zonotopes") {
    for (int n = 4; n <= 6; ++n) {
        Polytope p = build_zonotope(generic_zonotope(n, 1000 + static_cast<std::uint64_t>(n)));
        Rng rng(static_cast<std::uint64_t>(n));
        for (int i = 0; i < 20; ++i)
            CHECK(average_vertices_exact(p, random_rational_direction(rng, 3)) ==
                  Rat(2 * (n - 1)));
    }
}
