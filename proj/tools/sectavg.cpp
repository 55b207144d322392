#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sectavg/fragmentation.hpp"
#include "sectavg/gallery.hpp"
#include "sectavg/io.hpp"
#include "sectavg/tiling.hpp"
#include "sectavg/verify.hpp"

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw sectavg::Error("cannot open output file: " + out_path);
    f << text;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw sectavg::ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw sectavg::ParseError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

// files written by `sectavg example` wrap the payload in a named object
sectavg::Polytope load_polytope(const std::string& path) {
    nlohmann::json j = load_json(path);
    if (j.is_object() && j.contains("polytope")) return sectavg::polytope_from_json(j["polytope"]);
    return sectavg::polytope_from_json(j);
}

sectavg::GeneratorSet load_generators(const std::string& path) {
    nlohmann::json j = load_json(path);
    if (j.is_object() && j.contains("generators") && j["generators"].is_object())
        return sectavg::generators_from_json(j["generators"]);
    return sectavg::generators_from_json(j);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string piece =
            comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
        try {
            out.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw sectavg::ParseError("bad integer list: " + s);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cross-section vertex averages for convex polytopes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    std::string out_path;
    int threads = 1;
    app.add_option("--seed", seed, "random seed; all randomness derives from it")
        ->capture_default_str();
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--threads", threads, "worker threads for path simulations")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();

    // avg
    auto* avg = app.add_subcommand("avg", "directional average vertex count of a section");
    std::string avg_polytope, avg_dir;
    std::int64_t avg_sweep = 0;
    avg->add_option("--polytope", avg_polytope, "polytope JSON file")->required();
    avg->add_option("--dir", avg_dir, "direction, e.g. 1,1,-1")->required();
    bool avg_exact = false;
    auto* avg_exact_flag = avg->add_flag("--exact", avg_exact, "exact rational value (default)");
    auto* avg_sweep_opt =
        avg->add_option("--sweep", avg_sweep, "Monte Carlo sweep with this many level samples");
    avg_sweep_opt->excludes(avg_exact_flag);

    // zono
    auto* zono = app.add_subcommand("zono", "zonotope lab: hypergraph, prediction, build");
    std::string zono_generators;
    zono->add_option("--generators", zono_generators, "generator set JSON file")->required();
    bool zono_hyper = false, zono_predict = false, zono_build = false;
    zono->add_flag("--hypergraph", zono_hyper, "emit the coplanarity hypergraph");
    zono->add_flag("--predict-lambda", zono_predict, "emit the degree-based lambda prediction");
    zono->add_flag("--build", zono_build, "build the zonotope and emit it");

    // example
    auto* example = app.add_subcommand("example", "emit a built-in construction as JSON");
    std::string example_name;
    example->add_option("name", example_name, "construction name")->required();
    int ex_n = -1, ex_k = -1, ex_l = -1;
    example->add_option("--n", ex_n, "generator count where applicable");
    example->add_option("--k", ex_k, "k parameter where applicable");
    example->add_option("--l", ex_l, "row count where applicable");

    // fragment
    auto* fragment = app.add_subcommand("fragment", "repeated random halving of a polytope");
    std::string frag_polytope, frag_policy = "paths:1000";
    int frag_steps = 5;
    bool frag_weak = false;
    fragment->add_option("--polytope", frag_polytope, "polytope JSON file")->required();
    fragment->add_option("--steps", frag_steps, "recursion depth")->capture_default_str();
    fragment->add_option("--policy", frag_policy,
                         "full, paths:K (K root-to-leaf samples), or uniform:K "
                         "(K re-cuts of the frozen body per step)")
        ->capture_default_str();
    fragment->add_flag("--weak-scan", frag_weak, "add a column flagging statistically flat steps");

    // tiling
    auto* tiling = app.add_subcommand("tiling", "plane sections of the unit cube grid");
    std::string til_normal, til_offset = "0", til_series;
    int til_window = 0;
    tiling->add_option("--normal", til_normal, "plane normal, e.g. 1,2,3")->required();
    tiling->add_option("--offset", til_offset, "plane offset c in n.x = c")->capture_default_str();
    auto* til_window_opt = tiling->add_option("--window", til_window, "window half-size m");
    auto* til_series_opt =
        tiling->add_option("--series", til_series, "comma list of increasing windows");
    til_window_opt->excludes(til_series_opt);

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run the full claim verification table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (avg->parsed()) {
            sectavg::Polytope p = load_polytope(avg_polytope);
            sectavg::Vec z = sectavg::parse_tuple(avg_dir);
            nlohmann::json j;
            j["dir"] = avg_dir;
            j["seed"] = seed;
            if (avg_sweep_opt->count() > 0) {
                sectavg::SweepResult r = sectavg::average_vertices_sweep(p, z, avg_sweep, seed);
                j["method"] = "sweep";
                j["samples"] = r.samples;
                j["value"] = r.mean;
                j["stderr"] = r.std_error;
            } else {
                j["method"] = "exact";
                j["value"] = sectavg::rat_to_string(sectavg::average_vertices_exact(p, z));
            }
            emit(out_path, j.dump(2) + "\n");
            return 0;
        }

        if (zono->parsed()) {
            bool all = !zono_hyper && !zono_predict && !zono_build;
            sectavg::GeneratorSet g = load_generators(zono_generators);
            sectavg::GeneratorHypergraph h = sectavg::coplanarity_hypergraph(g);
            nlohmann::json j;
            j["seed"] = seed;
            if (all || zono_hyper) {
                nlohmann::json hj;
                hj["edges"] = h.edges;
                hj["degrees"] = h.degrees;
                j["hypergraph"] = hj;
            }
            if (all || zono_predict) {
                sectavg::LambdaPrediction pred = sectavg::predict_lambda(h);
                nlohmann::json pj;
                pj["constant"] = pred.constant;
                if (pred.constant) pj["lambda"] = pred.lambda;
                pj["degrees"] = pred.degrees;
                j["prediction"] = pj;
            }
            if (all || zono_build) {
                sectavg::Polytope p = sectavg::build_zonotope(g);
                nlohmann::json bj;
                bj["polytope"] = sectavg::polytope_to_json(p);
                bj["vertices"] = p.vertex_count();
                bj["edges"] = p.edge_count();
                bj["facets"] = p.facet_count();
                bj["is_zonotope"] = sectavg::is_zonotope(p);
                j["build"] = bj;
            }
            emit(out_path, j.dump(2) + "\n");
            return 0;
        }

        if (example->parsed()) {
            sectavg::ExampleParams prm;
            if (ex_n >= 0) prm.n = ex_n;
            if (ex_k >= 0) prm.k = ex_k;
            if (ex_l >= 0) prm.l = ex_l;
            prm.seed = seed;
            sectavg::BuiltinExample ex = sectavg::builtin_example(example_name, prm);
            nlohmann::json j;
            j["name"] = ex.name;
            j["seed"] = seed;
            if (ex.polytope) j["polytope"] = sectavg::polytope_to_json(*ex.polytope);
            if (ex.generators) j["generators"] = sectavg::generators_to_json(*ex.generators);
            emit(out_path, j.dump(2) + "\n");
            return 0;
        }

        if (fragment->parsed()) {
            sectavg::Polytope p = load_polytope(frag_polytope);
            sectavg::FragmentPolicy policy;
            int count = 0;
            if (frag_policy == "full") {
                policy = sectavg::FragmentPolicy::full;
            } else if (frag_policy.rfind("paths:", 0) == 0) {
                policy = sectavg::FragmentPolicy::paths;
                try {
                    count = std::stoi(frag_policy.substr(6));
                } catch (const std::exception&) {
                    throw sectavg::ParseError("bad path count in --policy");
                }
            } else if (frag_policy.rfind("uniform:", 0) == 0) {
                policy = sectavg::FragmentPolicy::uniform;
                try {
                    count = std::stoi(frag_policy.substr(8));
                } catch (const std::exception&) {
                    throw sectavg::ParseError("bad cut count in --policy");
                }
            } else {
                throw sectavg::ParseError("--policy must be full, paths:K, or uniform:K");
            }
            sectavg::FragmentSeries fs =
                sectavg::fragment_recursion(p, frag_steps, policy, count, seed, threads);
            std::ostringstream os;
            os << "step,mean_V,stderr,n_fragments";
            if (frag_weak) os << ",within_band";
            os << "\n";
            for (size_t i = 0; i < fs.steps.size(); ++i) {
                const sectavg::FragmentStep& st = fs.steps[i];
                os << st.step << ',' << fmt_double(st.mean_v) << ',' << fmt_double(st.std_error)
                   << ',' << st.n_fragments;
                if (frag_weak) {
                    if (i == 0) {
                        os << ',';
                    } else {
                        const sectavg::FragmentStep& prev = fs.steps[i - 1];
                        double band = 3.0 * std::sqrt(prev.std_error * prev.std_error +
                                                      st.std_error * st.std_error);
                        os << ',' << (std::fabs(st.mean_v - prev.mean_v) <= band ? 1 : 0);
                    }
                }
                os << "\n";
            }
            emit(out_path, os.str());
            return 0;
        }

        if (tiling->parsed()) {
            sectavg::Vec n = sectavg::parse_tuple(til_normal);
            sectavg::GridPlane plane =
                sectavg::make_grid_plane(n, sectavg::rat_from_string(til_offset));
            std::vector<int> windows;
            if (til_series_opt->count() > 0) windows = parse_int_list(til_series);
            else if (til_window_opt->count() > 0) windows = {til_window};
            else throw sectavg::ParseError("tiling needs --window or --series");
            std::vector<sectavg::TilingReport> series = sectavg::tiling_convergence(plane, windows);
            std::ostringstream os;
            os << "m,tiles,n3,n4,n5,n6,average\n";
            for (const sectavg::TilingReport& r : series) {
                os << r.window << ',' << r.tiles << ',' << r.side_counts[0] << ','
                   << r.side_counts[1] << ',' << r.side_counts[2] << ',' << r.side_counts[3]
                   << ',' << sectavg::rat_to_string(r.average) << "\n";
            }
            emit(out_path, os.str());
            return 0;
        }

        if (verify->parsed()) {
            std::vector<sectavg::ClaimResult> rows = sectavg::run_paper_claims(seed, threads);
            size_t key_w = 0;
            for (const auto& r : rows) key_w = std::max(key_w, r.key.size());
            std::ostringstream os;
            int passed = 0;
            for (const auto& r : rows) {
                os << r.key << std::string(key_w - r.key.size() + 2, ' ')
                   << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << "\n";
                std::cerr << "# " << r.key << ": " << fmt_double(r.seconds) << " s\n";
                if (r.pass) ++passed;
            }
            os << passed << "/" << rows.size() << " claims verified, seed " << seed << "\n";
            emit(out_path, os.str());
            return passed == static_cast<int>(rows.size()) ? 0 : 1;
        }
    } catch (const sectavg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
