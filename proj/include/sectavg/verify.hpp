#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "sectavg/fragmentation.hpp"
#include "sectavg/gallery.hpp"
#include "sectavg/tiling.hpp"

namespace sectavg {

// One row of the verification table. The key is a stable anchor into the
// source text whose numbers the check reproduces; CI greps for it.
struct ClaimResult {
    std::string key;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct CorpusEntry {
    std::string name;
    Polytope body;
};

namespace verify_detail {

inline Vec v3(long x, long y, long z) { return Vec(Rat(x), Rat(y), Rat(z)); }
inline Vec v2(long x, long y) { return Vec(Rat(x), Rat(y)); }

inline Polytope tetrahedron() {
    return convex_hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}, 3);
}

inline Polytope box_123() {
    std::vector<Vec> pts;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c) pts.push_back(v3(a, 2 * b, 3 * c));
    return convex_hull(pts, 3);
}

inline Polytope octahedron() {
    return convex_hull({v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0), v3(0, -1, 0), v3(0, 0, 1),
                        v3(0, 0, -1)},
                       3);
}

inline Polytope prism() {
    return convex_hull({v3(0, 0, 0), v3(2, 0, 0), v3(0, 2, 0), v3(0, 0, 1), v3(2, 0, 1),
                        v3(0, 2, 1)},
                       3);
}

inline Polytope square() {
    return convex_hull({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}, 2);
}

inline Polytope parallelogram() {
    return convex_hull({v2(0, 0), v2(2, 0), v2(3, 1), v2(1, 1)}, 2);
}

inline Polytope triangle_2d() { return convex_hull({v2(0, 0), v2(3, 0), v2(0, 2)}, 2); }

inline Polytope pentagon_2d() {
    return convex_hull({v2(0, 0), v2(2, 0), v2(3, 2), v2(1, 3), v2(-1, 1)}, 2);
}

inline Polytope hexagon_2d() {
    return convex_hull({v2(0, 0), v2(2, 0), v2(3, 1), v2(3, 3), v2(1, 4), v2(-1, 2)}, 2);
}

inline std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

template <typename F>
ClaimResult timed(const std::string& key, const std::string& title, F&& body) {
    ClaimResult r;
    r.key = key;
    r.title = title;
    auto start = std::chrono::steady_clock::now();
    try {
        std::ostringstream detail;
        r.pass = body(detail);
        r.detail = detail.str();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace verify_detail

// Fixed bodies the randomized checks cycle through: a spread of 3D solids,
// the built-in sum constructions, two generic zonotopes, and 2D polygons.
inline std::vector<CorpusEntry> verification_corpus() {
    using namespace verify_detail;
    std::vector<CorpusEntry> c;
    c.push_back({"cube", unit_cube()});
    c.push_back({"tetrahedron", tetrahedron()});
    c.push_back({"box_123", box_123()});
    c.push_back({"parallelepiped",
                 build_zonotope(make_generator_set({v3(1, 0, 0), v3(1, 2, 0), v3(1, 1, 3)}))});
    c.push_back({"octahedron", octahedron()});
    c.push_back({"prism", prism()});
    c.push_back({"example_5_1", example_5_1()});
    c.push_back({"example_5_2_k3", example_5_2(3)});
    c.push_back({"example_5_2_k4", example_5_2(4)});
    c.push_back({"example_5_2_k5", example_5_2(5)});
    c.push_back({"example_5_3", example_5_3()});
    c.push_back({"zonotope_6_1_n5", build_zonotope(example_6_1(5))});
    c.push_back({"zonotope_pappus", build_zonotope(example_6_3_pappus())});
    c.push_back({"generic_zonotope_4", build_zonotope(generic_zonotope(4, 41))});
    c.push_back({"generic_zonotope_6", build_zonotope(generic_zonotope(6, 61))});
    c.push_back({"square", square()});
    c.push_back({"parallelogram", parallelogram()});
    c.push_back({"triangle_2d", triangle_2d()});
    c.push_back({"pentagon_2d", pentagon_2d()});
    c.push_back({"hexagon_2d", hexagon_2d()});
    return c;
}

// criterion 1: the cube's directional average is 4 in every direction
inline ClaimResult check_cube_constancy(std::uint64_t seed) {
    using namespace verify_detail;
    return timed("Cube constancy", "A(cube, z) = 4 exactly, 1000 directions",
                 [&](std::ostringstream& d) {
                     Polytope cube = unit_cube();
                     Rng rng(derive_subseed(seed, 1));
                     for (int i = 0; i < 1000; ++i) {
                         Vec z = random_rational_direction(rng, 3);
                         Rat a = average_vertices_exact(cube, z);
                         if (a != Rat(4)) {
                             d << "A = " << rat_to_string(a) << " at " << vec_to_string(z);
                             return false;
                         }
                     }
                     d << "1000/1000 directions gave exactly 4";
                     return true;
                 });
}

// criterion 2: generic zonotopes with n generators have A = 2(n-1) and all
// n edge classes of size 2(n-1)
inline ClaimResult check_generic_zonotope_averages(std::uint64_t seed) {
    using namespace verify_detail;
    return timed("Fact 1.2", "generic zonotopes: A = 2(n-1), |E_i| = 2(n-1)",
                 [&](std::ostringstream& d) {
                     for (int n = 4; n <= 8; ++n) {
                         GeneratorSet g = generic_zonotope(n, derive_subseed(seed, 200 + n));
                         Polytope p = build_zonotope(g);
                         EdgeClassPartition part = edge_classes(p);
                         if (static_cast<int>(part.classes.size()) != n) {
                             d << "n=" << n << ": " << part.classes.size() << " classes";
                             return false;
                         }
                         for (const EdgeClass& cl : part.classes)
                             if (static_cast<int>(cl.edges.size()) != 2 * (n - 1)) {
                                 d << "n=" << n << ": class size " << cl.edges.size();
                                 return false;
                             }
                         Rng rng(derive_subseed(seed, 210 + n));
                         for (int i = 0; i < 100; ++i) {
                             Vec z = random_rational_direction(rng, 3);
                             if (average_vertices_exact(p, z) != Rat(2 * (n - 1))) {
                                 d << "n=" << n << ": A mismatch at " << vec_to_string(z);
                                 return false;
                             }
                         }
                     }
                     d << "n = 4..8, 100 directions each, all exact";
                     return true;
                 });
}

// criterion 3: predicted lambda = 2 deg equals the built zonotope's constant
// A for three structured generator sets; an unbalanced set is non-constant
inline ClaimResult check_degree_doubling(std::uint64_t seed) {
    using namespace verify_detail;
    return timed(
        "Theorem 1.3 / Claim 6.1",
        "lambda = 2 deg matches built zonotopes (Examples 6.1-6.3); unbalanced set refused",
        [&](std::ostringstream& d) {
            struct Case {
                const char* name;
                GeneratorSet gens;
                int lambda;
            };
            std::vector<Case> cases;
            cases.push_back({"example_6_1(5)", example_6_1(5), 8});
            cases.push_back({"example_6_2(3,4)", example_6_2(3, 4), 18});
            cases.push_back({"example_6_3_pappus", example_6_3_pappus(), 10});
            int idx = 0;
            for (const Case& c : cases) {
                GeneratorHypergraph h = coplanarity_hypergraph(c.gens);
                LambdaPrediction pred = predict_lambda(h);
                if (!pred.constant || pred.lambda != c.lambda) {
                    d << c.name << ": predicted lambda "
                      << (pred.constant ? std::to_string(pred.lambda) : std::string("non-constant"));
                    return false;
                }
                Polytope p = build_zonotope(c.gens);
                // every generator's edge class must have 2 deg members
                EdgeClassPartition part = edge_classes(p);
                for (int i = 0; i < h.n; ++i) {
                    IVec want = canonical_line_direction(c.gens.generators[static_cast<size_t>(i)]);
                    bool found = false;
                    for (const EdgeClass& cl : part.classes)
                        if (cl.direction == want) {
                            found = true;
                            if (static_cast<int>(cl.edges.size()) != 2 * h.degrees[static_cast<size_t>(i)]) {
                                d << c.name << ": |E_" << i << "| = " << cl.edges.size()
                                  << ", want " << 2 * h.degrees[static_cast<size_t>(i)];
                                return false;
                            }
                        }
                    if (!found) {
                        d << c.name << ": generator " << i << " spawned no edge class";
                        return false;
                    }
                }
                ProbeResult probe = constant_A_probe(p, 64, derive_subseed(seed, 300 + idx));
                if (!probe.constant || probe.value != Rat(c.lambda)) {
                    d << c.name << ": probe "
                      << (probe.constant ? rat_to_string(probe.value) : std::string("non-constant"));
                    return false;
                }
                ++idx;
            }
            GeneratorSet unbal =
                make_generator_set({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(1, 1, 0)});
            LambdaPrediction pred = predict_lambda(coplanarity_hypergraph(unbal));
            if (pred.constant) {
                d << "unbalanced set predicted constant";
                return false;
            }
            ProbeResult probe =
                constant_A_probe(build_zonotope(unbal), 64, derive_subseed(seed, 310));
            if (probe.constant || probe.a1 == probe.a2) {
                d << "unbalanced set: no witness pair";
                return false;
            }
            d << "lambda 8/18/10 certified; witness pair " << rat_to_string(probe.a1) << " vs "
              << rat_to_string(probe.a2);
            return true;
        });
}

// criterion 4: the two-quadrilateral sum has A = 6, eight classes of three
// edges, and is a half-zonotope but not a zonotope
inline ClaimResult check_quad_sum_example(std::uint64_t seed) {
    using namespace verify_detail;
    return timed("Example 5.1", "quadrilateral sum: A = 6, 8 classes x 3 edges, half-zonotope",
                 [&](std::ostringstream& d) {
                     Polytope p = example_5_1();
                     EdgeClassPartition part = edge_classes(p);
                     if (part.classes.size() != 8) {
                         d << part.classes.size() << " classes";
                         return false;
                     }
                     for (const EdgeClass& cl : part.classes)
                         if (cl.edges.size() != 3) {
                             d << "class of size " << cl.edges.size();
                             return false;
                         }
                     Rng rng(derive_subseed(seed, 4));
                     for (int i = 0; i < 100; ++i) {
                         Vec z = random_rational_direction(rng, 3);
                         if (average_vertices_exact(p, z) != Rat(6)) {
                             d << "A mismatch at " << vec_to_string(z);
                             return false;
                         }
                     }
                     if (is_zonotope(p)) {
                         d << "classified as zonotope";
                         return false;
                     }
                     if (!is_half_zonotope(p)) {
                         d << "not a half-zonotope";
                         return false;
                     }
                     d << "A = 6 over 100 directions; 8 classes x 3; half-zonotope, not zonotope";
                     return true;
                 });
}

// criterion 5: perturbed 2k-gon sums have A = 2(k+1) for k in {3,4,5}
inline ClaimResult check_polygon_sum_example(std::uint64_t seed) {
    using namespace verify_detail;
    return timed("Example 5.2", "perturbed 2k-gon sums: A = 2(k+1), k = 3,4,5",
                 [&](std::ostringstream& d) {
                     for (int k = 3; k <= 5; ++k) {
                         Polytope p = example_5_2(k);
                         Rng rng(derive_subseed(seed, 500 + static_cast<std::uint64_t>(k)));
                         for (int i = 0; i < 60; ++i) {
                             Vec z = random_rational_direction(rng, 3);
                             if (average_vertices_exact(p, z) != Rat(2 * (k + 1))) {
                                 d << "k=" << k << ": A mismatch at " << vec_to_string(z);
                                 return false;
                             }
                         }
                         if (is_zonotope(p)) {
                             d << "k=" << k << ": classified as zonotope";
                             return false;
                         }
                         if (!is_half_zonotope(p)) {
                             d << "k=" << k << ": not a half-zonotope";
                             return false;
                         }
                     }
                     d << "k = 3,4,5: A = 8,10,12 exactly; all half-zonotopes, none zonotopes";
                     return true;
                 });
}

// criterion 6: the three-triangle sum has A = 4 and facet census
// 3 triangles, 3 pentagons, 1 hexagon
inline ClaimResult check_triangle_sum_example(std::uint64_t seed) {
    using namespace verify_detail;
    return timed("Example 5.3", "triangle sum: A = 4; 3 triangles, 3 pentagons, 1 hexagon",
                 [&](std::ostringstream& d) {
                     Polytope p = example_5_3();
                     std::vector<int> sizes;
                     for (const auto& f : p.facets) sizes.push_back(static_cast<int>(f.size()));
                     std::sort(sizes.begin(), sizes.end());
                     std::vector<int> want = {3, 3, 3, 5, 5, 5, 6};
                     if (sizes != want) {
                         d << "facet sizes";
                         for (int s : sizes) d << ' ' << s;
                         return false;
                     }
                     Rng rng(derive_subseed(seed, 6));
                     for (int i = 0; i < 100; ++i) {
                         Vec z = random_rational_direction(rng, 3);
                         if (average_vertices_exact(p, z) != Rat(4)) {
                             d << "A mismatch at " << vec_to_string(z);
                             return false;
                         }
                     }
                     if (is_zonotope(p) || !is_half_zonotope(p)) {
                         d << "zonotope flags wrong";
                         return false;
                     }
                     d << "census 3/3/1, A = 4 over 100 directions, half-zonotope only";
                     return true;
                 });
}

// criterion 7: exact cut bookkeeping over 1000 random generic cuts:
// V11 + V12 = V0 + 2k*, V1 = V0/2 + k*, and volumes add up
inline ClaimResult check_cut_identities(std::uint64_t seed) {
    using namespace verify_detail;
    return timed("Eq. (8.5)", "1000 cuts: V1 = V0/2 + k*, volumes additive",
                 [&](std::ostringstream& d) {
                     std::vector<CorpusEntry> corpus = verification_corpus();
                     Rng rng(derive_subseed(seed, 7));
                     for (int i = 0; i < 1000; ++i) {
                         const Polytope& body = corpus[static_cast<size_t>(i) % corpus.size()].body;
                         bool done = false;
                         for (int retry = 0; retry < 100 && !done; ++retry) {
                             Vec z = random_sphere_direction(rng, body.dim, 12);
                             SupportInterval s = support_interval(body, z);
                             Rat t = s.t_minus + rng.dyadic_unit(20) * s.width();
                             try {
                                 CutPieces pieces = cut_both_sides(body, z, t);
                                 int v0 = body.vertex_count();
                                 int v11 = pieces.below.vertex_count();
                                 int v12 = pieces.above.vertex_count();
                                 if (v11 + v12 != v0 + 2 * pieces.k_star) {
                                     d << "vertex identity broken at cut " << i;
                                     return false;
                                 }
                                 if (Rat(v11 + v12, 2) != Rat(v0, 2) + pieces.k_star) {
                                     d << "mean identity broken at cut " << i;
                                     return false;
                                 }
                                 if (pieces.below.volume() + pieces.above.volume() !=
                                     body.volume()) {
                                     d << "volume not additive at cut " << i;
                                     return false;
                                 }
                                 done = true;
                             } catch (const NonGenericCut&) {
                             }
                         }
                         if (!done) {
                             d << "could not find a generic cut for item " << i;
                             return false;
                         }
                     }
                     d << "1000 cuts across " << 20 << " bodies, identities exact";
                     return true;
                 });
}

// criterion 8: the three pinned cuts classify as critical, subcritical,
// supercritical
inline ClaimResult check_cut_classification() {
    using namespace verify_detail;
    return timed("Lemma 8.2", "pinned cuts: axis critical, corner subcritical, apex supercritical",
                 [&](std::ostringstream& d) {
                     Polytope cube = unit_cube();
                     CutRecord axis = classify_cut(cube, v3(0, 0, 1), Rat(1, 2));
                     if (axis.cut_class != Criticality::critical || axis.k_star != 4) {
                         d << "axis cut: k* = " << axis.k_star;
                         return false;
                     }
                     CutRecord corner = classify_cut(cube, v3(1, 1, 1), Rat(1, 2));
                     if (corner.cut_class != Criticality::subcritical || corner.k_star != 3 ||
                         corner.v11 != 4 || corner.v12 != 10) {
                         d << "corner cut: k* = " << corner.k_star << ", V11 = " << corner.v11
                           << ", V12 = " << corner.v12;
                         return false;
                     }
                     CutRecord apex = classify_cut(tetrahedron(), v3(0, 0, 1), Rat(1, 2));
                     if (apex.cut_class != Criticality::supercritical || apex.k_star != 3) {
                         d << "apex cut: k* = " << apex.k_star;
                         return false;
                     }
                     d << "k* = 4 / 3 / 3 with classes critical / subcritical / supercritical";
                     return true;
                 });
}

// criterion 9: polytope-level verdicts (cube and parallelogram critical,
// n=4 zonotope subcritical) and the cube recursion holding at 8
inline ClaimResult check_criticality_verdicts(std::uint64_t seed, int threads = 1) {
    using namespace verify_detail;
    return timed(
        "Def. 8.3 / Eq. (8.7)", "verdicts: cube and parallelogram critical; recursion stays at 8",
        [&](std::ostringstream& d) {
            Polytope cube = unit_cube();
            CriticalityVerdict a = criticality_of_polytope(cube, 256, derive_subseed(seed, 90));
            CriticalityVerdict b = criticality_of_polytope(cube, 256, derive_subseed(seed, 91));
            if (!a.exact || a.verdict != Criticality::critical || a.lambda != Rat(4) ||
                b.verdict != a.verdict || b.lambda != a.lambda) {
                d << "cube verdict not exact-critical or seed-dependent";
                return false;
            }
            CriticalityVerdict pg =
                criticality_of_polytope(parallelogram(), 256, derive_subseed(seed, 92));
            if (!pg.exact || pg.verdict != Criticality::critical || pg.lambda != Rat(2)) {
                d << "parallelogram verdict wrong";
                return false;
            }
            Polytope z4 = build_zonotope(generic_zonotope(4, 41));
            if (z4.vertex_count() != 14 || z4.edge_count() != 24 || z4.facet_count() != 12) {
                d << "n=4 zonotope has V/E/F " << z4.vertex_count() << "/" << z4.edge_count()
                  << "/" << z4.facet_count();
                return false;
            }
            CriticalityVerdict zv = criticality_of_polytope(z4, 256, derive_subseed(seed, 94));
            if (!zv.exact || zv.verdict != Criticality::subcritical || zv.lambda != Rat(6)) {
                d << "n=4 zonotope verdict wrong";
                return false;
            }
            FragmentSeries fs = fragment_recursion(cube, 5, FragmentPolicy::paths, 10000,
                                                   derive_subseed(seed, 93), threads);
            bool band_ok = true;
            std::ostringstream series;
            for (const FragmentStep& st : fs.steps) {
                if (st.step == 0) continue;
                if (st.step > 1) series << " ";
                series << fmt(st.mean_v) << "(" << fmt(st.std_error) << ")";
                if (std::fabs(st.mean_v - 8.0) > 3.0 * st.std_error) band_ok = false;
            }
            if (!band_ok) {
                // Exact verdicts above all hold; what fails is the demand that
                // descendant means sit at 8 within Monte Carlo error. The
                // descendants of a cube are not constant-A, and the measured
                // series decays by a few percent, far outside the 10^4-path
                // error bar. Reported as measured.
                d << "verdicts exact, but descendant means drift from 8: " << series.str();
                return false;
            }
            d << "verdicts exact; 5-step recursion mean in 8 +- 3 stderr (10000 paths)";
            return true;
        });
}

// criterion 10: Monte Carlo sweep agrees with the exact value on the whole
// corpus, 20 directions each, 1e5 samples
inline ClaimResult check_sweep_agreement(std::uint64_t seed) {
    using namespace verify_detail;
    return timed("Eq. (3.1) sweep", "sweep estimator matches exact A on 20 bodies x 20 directions",
                 [&](std::ostringstream& d) {
                     std::vector<CorpusEntry> corpus = verification_corpus();
                     double worst_abs = 0.0, worst_sigma = 0.0;
                     std::string abs_cell, sigma_cell;
                     int sigma_bad = 0, abs_bad = 0;
                     std::uint64_t cell = 0;
                     for (const CorpusEntry& e : corpus) {
                         Rng dir_rng(derive_subseed(seed, 1000 + cell));
                         for (int j = 0; j < 20; ++j) {
                             Vec z = random_rational_direction(dir_rng, e.body.dim);
                             Rat exact = average_vertices_exact(e.body, z);
                             SweepResult sw = average_vertices_sweep(
                                 e.body, z, 100000, derive_subseed(seed, 2000 + cell * 64 + j));
                             double diff = std::fabs(sw.mean - to_double(exact));
                             if (diff > worst_abs) {
                                 worst_abs = diff;
                                 abs_cell = e.name + " dir " + std::to_string(j);
                             }
                             double sig = sw.std_error > 0 ? diff / sw.std_error : 0.0;
                             if (sig > worst_sigma) {
                                 worst_sigma = sig;
                                 sigma_cell = e.name + " dir " + std::to_string(j);
                             }
                             if (diff > 3.0 * sw.std_error + 1e-12) ++sigma_bad;
                             if (diff > 1e-2) ++abs_bad;
                         }
                         ++cell;
                     }
                     if (sigma_bad == 0 && abs_bad == 0) {
                         d << "400 sweeps, worst |sweep - exact| = " << fmt(worst_abs) << " ("
                           << fmt(worst_sigma) << " sigma)";
                         return true;
                     }
                     // The 3*stderr clause is the statistical contract; the
                     // extra 1e-2 absolute bound is tighter than one stderr on
                     // the high-variance bodies at 1e5 samples, so some cells
                     // exceed it in any honest run. Both are reported.
                     d << sigma_bad << " cells beyond 3*stderr (worst " << fmt(worst_sigma)
                       << " sigma at " << sigma_cell << "); " << abs_bad
                       << " cells beyond 1e-2 absolute (worst " << fmt(worst_abs) << " at "
                       << abs_cell << ")";
                     return false;
                 });
}

// criterion 11: windowed tiling averages approach 4 for a lattice-free
// plane and equal 3 exactly for the all-triangle plane
inline ClaimResult check_tiling_averages() {
    using namespace verify_detail;
    return timed(
        "Theorem 7.1", "tiling averages: (1,2,3 | 1/2) -> 4; (1,1,-1 | 0) all triangles at 3",
        [&](std::ostringstream& d) {
            GridPlane free_plane = make_grid_plane(v3(1, 2, 3), Rat(1, 2));
            if (plane_contains_lattice_point(free_plane)) {
                d << "(1,2,3 | 1/2) claims a lattice point";
                return false;
            }
            std::vector<TilingReport> series = tiling_convergence(free_plane, {10, 20, 50, 100});
            Rat prev_err;
            bool first = true;
            for (const TilingReport& r : series) {
                Rat err = abs(r.average - Rat(4));
                if (!first && err >= prev_err) {
                    d << "error not strictly decreasing at m = " << r.window;
                    return false;
                }
                prev_err = err;
                first = false;
            }
            if (prev_err > Rat(1, 10)) {
                d << "m = 100 error " << rat_to_string(prev_err);
                return false;
            }
            GridPlane tri_plane = make_grid_plane(v3(1, 1, -1), Rat(0));
            if (!plane_contains_lattice_point(tri_plane)) {
                d << "(1,1,-1 | 0) misses the lattice";
                return false;
            }
            TilingReport tr = tiling_average(tri_plane, 50);
            if (tr.average != Rat(3) || tr.side_counts[0] != tr.tiles) {
                d << "triangle plane: average " << rat_to_string(tr.average) << ", "
                  << tr.side_counts[0] << "/" << tr.tiles << " triangles";
                return false;
            }
            d << "errors to 4 decreasing, final " << rat_to_string(prev_err) << "; "
              << tr.tiles << " tiles all triangles at exactly 3";
            return true;
        });
}

// criterion 12: A(P, sz) = A(P, z) for random rational scales
inline ClaimResult check_scale_invariance(std::uint64_t seed) {
    using namespace verify_detail;
    return timed("Scale invariance", "A(P, sz) = A(P, z) for random rational s != 0",
                 [&](std::ostringstream& d) {
                     std::vector<CorpusEntry> corpus = verification_corpus();
                     Rng rng(derive_subseed(seed, 12));
                     for (const CorpusEntry& e : corpus) {
                         for (int j = 0; j < 3; ++j) {
                             Vec z = random_rational_direction(rng, e.body.dim);
                             Rat s(rng.uniform_int(1, 50), rng.uniform_int(1, 50));
                             if (rng.u64() & 1) s = -s;
                             if (average_vertices_exact(e.body, s * z) !=
                                 average_vertices_exact(e.body, z)) {
                                 d << e.name << ": scale " << rat_to_string(s) << " changed A";
                                 return false;
                             }
                         }
                     }
                     d << "20 bodies x 3 directions, exact equality";
                     return true;
                 });
}

inline std::vector<ClaimResult> run_paper_claims(std::uint64_t seed, int threads = 1) {
    std::vector<ClaimResult> rows;
    rows.push_back(check_cube_constancy(seed));
    rows.push_back(check_generic_zonotope_averages(seed));
    rows.push_back(check_degree_doubling(seed));
    rows.push_back(check_quad_sum_example(seed));
    rows.push_back(check_polygon_sum_example(seed));
    rows.push_back(check_triangle_sum_example(seed));
    rows.push_back(check_cut_identities(seed));
    rows.push_back(check_cut_classification());
    rows.push_back(check_criticality_verdicts(seed, threads));
    rows.push_back(check_sweep_agreement(seed));
    rows.push_back(check_tiling_averages());
    rows.push_back(check_scale_invariance(seed));
    return rows;
}

} // namespace sectavg
