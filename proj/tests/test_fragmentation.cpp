#include <doctest.h>

#include "helpers.hpp"
#include "sectavg/fragmentation.hpp"

using namespace testutil;

TEST_CASE("classified cuts carry exact bookkeeping") {
    Polytope c = cube01();
    CutRecord axis = classify_cut(c, v3(0, 0, 1), Rat(1, 2));
    CHECK(axis.cut_class == Criticality::critical);
    CHECK(axis.k_star == 4);
    CHECK(axis.v11 == 8);
    CHECK(axis.v12 == 8);
    CHECK(axis.v1 == Rat(8));

    CutRecord corner = classify_cut(c, v3(1, 1, 1), Rat(1, 2));
    CHECK(corner.cut_class == Criticality::subcritical);
    CHECK(corner.v1 == Rat(7));

    CutRecord apex = classify_cut(tetrahedron(), v3(0, 0, 1), Rat(1, 2));
    CHECK(apex.cut_class == Criticality::supercritical);
    CHECK(apex.v1 == Rat(5));
}

TEST_CASE("expected child count is half the parent plus the average") {
    Polytope c = cube01();
    CHECK(expected_V1_direction(c, v3(0, 0, 1)) == Rat(8));
    CHECK(expected_V1_direction(c, v3(1, 2, 3)) == Rat(8));
    Polytope t = tetrahedron();
    CHECK(expected_V1_direction(t, v3(0, 0, 1)) == Rat(5));
    CHECK(expected_V1_direction(t, v3(1, 1, 0)) == Rat(6));
}

TEST_CASE("uniform levels at a fixed direction meet the expectation") {
    // Monte Carlo over t only: the mean of V1 must approach V0/2 + A(P,z)
    Polytope c = cube01();
    Vec z = v3(1, 2, 3);
    Rat want = expected_V1_direction(c, z);
    Rng rng(606);
    SupportInterval s = support_interval(c, z);
    Accumulator acc;
    for (int i = 0; i < 4000; ++i) {
        Rat t = s.t_minus + rng.dyadic_unit(24) * s.width();
        try {
            acc.add(to_double(classify_cut(c, z, t).v1));
        } catch (const NonGenericCut&) {
        }
    }
    CHECK(std::fabs(acc.mean - to_double(want)) <= 4.0 * acc.stderr_of_mean());
}

TEST_CASE("polytope verdicts: exact certificates where A is constant") {
    CriticalityVerdict cube_v = criticality_of_polytope(cube01(), 64, 1);
    CHECK(cube_v.exact);
    CHECK(cube_v.verdict == Criticality::critical);
    CHECK(cube_v.lambda == Rat(4));
    CHECK(cube_v.v1_std_error == 0.0);

    CriticalityVerdict cube_v2 = criticality_of_polytope(cube01(), 64, 987654);
    CHECK(cube_v2.verdict == cube_v.verdict);
    CHECK(cube_v2.lambda == cube_v.lambda);

    CriticalityVerdict tet_v = criticality_of_polytope(tetrahedron(), 200, 1);
    CHECK_FALSE(tet_v.exact);
    CHECK(tet_v.verdict == Criticality::supercritical);

    Polytope pg = convex_hull({v2(0, 0), v2(2, 0), v2(3, 1), v2(1, 1)}, 2);
    CriticalityVerdict pg_v = criticality_of_polytope(pg, 64, 1);
    CHECK(pg_v.exact);
    CHECK(pg_v.verdict == Criticality::critical);
    CHECK(pg_v.lambda == Rat(2));
}

TEST_CASE("full tracking conserves volume and doubles the population") {
    Polytope c = cube01();
    Rng rng(17);
    std::vector<Polytope> pop{c};
    for (int step = 0; step < 3; ++step) {
        std::vector<Polytope> next;
        for (const Polytope& q : pop) {
            CutPieces pieces = random_cut(q, rng);
            next.push_back(pieces.below);
            next.push_back(pieces.above);
        }
        pop = std::move(next);
        Rat total(0);
        for (const Polytope& q : pop) total += q.volume();
        CHECK(total == c.volume());
        CHECK(pop.size() == (static_cast<size_t>(1) << (step + 1)));
    }
}

TEST_CASE("full series matches a manual replay with the same seed") {
    Polytope c = cube01();
    FragmentSeries fs = fragment_recursion(c, 3, FragmentPolicy::full, 0, 2718);
    REQUIRE(fs.steps.size() == 4);
    CHECK(fs.steps[0].mean_v == 8.0);
    CHECK(fs.steps[0].n_fragments == 1);
    for (int i = 1; i <= 3; ++i) {
        CHECK(fs.steps[static_cast<size_t>(i)].n_fragments == (1 << i));
        CHECK(fs.steps[static_cast<size_t>(i)].std_error == 0.0);
    }
    // replay the population by consuming the same stream
    Rng rng(2718);
    std::vector<Polytope> pop{c};
    for (int step = 1; step <= 3; ++step) {
        std::vector<Polytope> next;
        for (const Polytope& q : pop) {
            CutPieces pieces = random_cut(q, rng);
            next.push_back(pieces.below);
            next.push_back(pieces.above);
        }
        pop = std::move(next);
        double sum = 0;
        for (const Polytope& q : pop) sum += q.vertex_count();
        CHECK(fs.steps[static_cast<size_t>(step)].mean_v ==
              sum / static_cast<double>(pop.size()));
    }
    CHECK_THROWS_AS(fragment_recursion(c, 11, FragmentPolicy::full, 0, 1),
                    PopulationCapExceeded);
}

TEST_CASE("path mode is thread-count invariant and seed sensitive") {
    Polytope c = cube01();
    FragmentSeries one = fragment_recursion(c, 3, FragmentPolicy::paths, 64, 9, 1);
    FragmentSeries four = fragment_recursion(c, 3, FragmentPolicy::paths, 64, 9, 4);
    REQUIRE(one.steps.size() == four.steps.size());
    for (size_t i = 0; i < one.steps.size(); ++i) {
        CHECK(one.steps[i].mean_v == four.steps[i].mean_v);
        CHECK(one.steps[i].std_error == four.steps[i].std_error);
    }
    FragmentSeries other = fragment_recursion(c, 3, FragmentPolicy::paths, 64, 10, 1);
    bool differs = false;
    for (size_t i = 1; i < one.steps.size(); ++i)
        if (one.steps[i].mean_v != other.steps[i].mean_v) differs = true;
    CHECK(differs);
}

TEST_CASE("square recursion is stationary at 4") {
    Polytope sq = convex_hull({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}, 2);
    FragmentSeries fs = fragment_recursion(sq, 4, FragmentPolicy::paths, 400, 5, 2);
    for (const FragmentStep& st : fs.steps) {
        if (st.step == 0) continue;
        CHECK(std::fabs(st.mean_v - 4.0) <= 3.0 * st.std_error);
    }
    WeakScan scan = weak_criticality_scan(sq, 4, 400, 5, 2);
    for (bool flat : scan.flat) CHECK(flat);
}

TEST_CASE("uniform re-cut series sits at V0/2 + mean k*") {
    Polytope c = cube01();
    FragmentSeries fs = fragment_recursion(c, 4, FragmentPolicy::uniform, 3000, 11);
    REQUIRE(fs.steps.size() == 5);
    for (const FragmentStep& st : fs.steps) {
        if (st.step == 0) continue;
        CHECK(st.n_fragments == 3000);
        CHECK(st.std_error > 0.0);
        // the cube is critical, so the frozen-body series is stationary at 8
        CHECK(std::fabs(st.mean_v - 8.0) <= 3.0 * st.std_error);
    }
    FragmentSeries again = fragment_recursion(c, 4, FragmentPolicy::uniform, 3000, 11, 8);
    for (size_t i = 0; i < fs.steps.size(); ++i)
        CHECK(fs.steps[i].mean_v == again.steps[i].mean_v); // threads do not apply

    Polytope t = tetrahedron();
    FragmentSeries ft = fragment_recursion(t, 3, FragmentPolicy::uniform, 2000, 12);
    for (const FragmentStep& st : ft.steps) {
        if (st.step == 0) continue;
        // V0/2 = 2 plus a direction-averaged section count strictly inside (3,4)
        CHECK(st.mean_v > 5.0);
        CHECK(st.mean_v < 6.0);
    }
    CHECK_THROWS_AS(fragment_recursion(c, 2, FragmentPolicy::uniform, 1, 1), DegenerateInput);
}
