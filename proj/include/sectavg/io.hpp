#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sectavg/hull.hpp"
#include "sectavg/zonotope.hpp"

namespace sectavg {

// Rationals travel as "p/q" strings so files stay exact; plain JSON integers
// are accepted on input, floats are not.
inline nlohmann::json rat_to_json(const Rat& r) { return rat_to_string(r); }

inline Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    throw ParseError("expected a rational as \"p/q\" string or integer");
}

inline nlohmann::json vec_to_json(const Vec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < v.dim; ++i) a.push_back(rat_to_json(v[i]));
    return a;
}

inline Vec vec_from_json(const nlohmann::json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ParseError("expected a coordinate array of length matching dim");
    Vec v = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) v[i] = rat_from_json(j[static_cast<size_t>(i)]);
    return v;
}

inline nlohmann::json polytope_to_json(const Polytope& p) {
    nlohmann::json j;
    j["dim"] = p.dim;
    nlohmann::json verts = nlohmann::json::array();
    for (const Vec& v : p.vertices) verts.push_back(vec_to_json(v));
    j["vertices"] = verts;
    return j;
}

// Only the vertex set is stored; the combinatorics are rebuilt by the hull,
// which also revalidates the geometry.
inline Polytope polytope_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw ParseError("polytope JSON needs \"dim\" and \"vertices\"");
    if (!j["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
    int dim = j["dim"].get<int>();
    if (dim != 2 && dim != 3) throw UnsupportedDimension("dim must be 2 or 3");
    if (!j["vertices"].is_array() || j["vertices"].empty())
        throw ParseError("\"vertices\" must be a non-empty array");
    std::vector<Vec> pts;
    pts.reserve(j["vertices"].size());
    for (const auto& row : j["vertices"]) pts.push_back(vec_from_json(row, dim));
    return convex_hull_any_rank(pts, dim);
}

inline nlohmann::json generators_to_json(const GeneratorSet& g) {
    nlohmann::json j;
    j["dim"] = g.dim;
    nlohmann::json rows = nlohmann::json::array();
    for (const Vec& v : g.generators) rows.push_back(vec_to_json(v));
    j["generators"] = rows;
    return j;
}

inline GeneratorSet generators_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("generators"))
        throw ParseError("generator JSON needs \"generators\"");
    int dim = 3;
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
        dim = j["dim"].get<int>();
    }
    if (dim != 3) throw UnsupportedDimension("generator sets live in dimension 3");
    if (!j["generators"].is_array() || j["generators"].empty())
        throw ParseError("\"generators\" must be a non-empty array");
    std::vector<Vec> gens;
    gens.reserve(j["generators"].size());
    for (const auto& row : j["generators"]) gens.push_back(vec_from_json(row, dim));
    return make_generator_set(std::move(gens));
}

// "1,2,-3" or "1/2,0,3" from the command line; two or three components
inline Vec parse_tuple(const std::string& s) {
    std::vector<Rat> comps;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string piece =
            comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
        comps.push_back(rat_from_string(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (comps.size() == 2) return Vec(comps[0], comps[1]);
    if (comps.size() == 3) return Vec(comps[0], comps[1], comps[2]);
    throw ParseError("expected 2 or 3 comma-separated rationals");
}

} // namespace sectavg
