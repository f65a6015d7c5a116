#pragma once

// JSON wire formats. Rationals travel as strings "p/q" (or "p" when q = 1);
// matrices as arrays of rows of such strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "qp/abelian.hpp"
#include "qp/binary_form.hpp"
#include "qp/config_aut.hpp"
#include "qp/diagonalize.hpp"
#include "qp/group.hpp"
#include "qp/hyperelliptic.hpp"
#include "qp/pencil.hpp"
#include "qp/picard.hpp"
#include "qp/slice.hpp"

namespace qp {

using json = nlohmann::json;

inline json rat_to_json(const Rat& q) { return q.get_str(); }

inline Rat rat_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("rational must be a string \"p/q\" or \"p\"");
    return parse_rat(j.get<std::string>());
}

inline json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline RatMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols) throw ParseError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(i, c) = rat_from_json(j[i][c]);
    }
    return m;
}

inline json rat_vector_to_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const Rat& q : v) arr.push_back(rat_to_json(q));
    return arr;
}

inline std::vector<Rat> rat_vector_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rat> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

inline json to_json(const BinaryForm& f) {
    return json{{"degree", f.degree()}, {"coeffs", rat_vector_to_json(f.coeffs())}};
}

inline BinaryForm binary_form_from_json(const json& j) {
    if (!j.contains("degree") || !j.contains("coeffs")) throw ParseError("binary form needs degree and coeffs");
    auto coeffs = rat_vector_from_json(j["coeffs"]);
    if (static_cast<int>(coeffs.size()) != j["degree"].get<int>() + 1)
        throw ParseError("binary form coefficient count does not match degree");
    return BinaryForm(std::move(coeffs));
}

inline json to_json(const QuadricPencil& p) {
    return json{{"n", p.n}, {"Q1", matrix_to_json(p.q1)}, {"Q2", matrix_to_json(p.q2)}};
}

inline QuadricPencil pencil_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("Q1") || !j.contains("Q2"))
        throw ParseError("pencil needs n, Q1, Q2");
    try {
        return QuadricPencil(j["n"].get<int>(), matrix_from_json(j["Q1"]), matrix_from_json(j["Q2"]));
    } catch (const SizeMismatchError& e) {
        throw ParseError(e.what());
    }
}

inline json to_json(const SlicePoint& w) {
    return json{{"n", w.n}, {"a", rat_vector_to_json(w.a)}, {"b", rat_vector_to_json(w.b)}};
}

inline SlicePoint slice_point_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("a") || !j.contains("b"))
        throw ParseError("slice point needs n, a, b");
    try {
        return SlicePoint(j["n"].get<int>(), rat_vector_from_json(j["a"]), rat_vector_from_json(j["b"]));
    } catch (const SizeMismatchError& e) {
        throw ParseError(e.what());
    }
}

inline json to_json(const GkElement& g) {
    json sigma = json::array();
    for (int v : g.sigma.images()) sigma.push_back(v);
    return json{{"k", g.k}, {"m", matrix_to_json(g.m)}, {"lambdas", rat_vector_to_json(g.lambdas)},
                {"sigma", sigma}};
}

inline GkElement gk_element_from_json(const json& j) {
    if (!j.contains("k") || !j.contains("m") || !j.contains("lambdas") || !j.contains("sigma"))
        throw ParseError("group element needs k, m, lambdas, sigma");
    std::vector<int> images;
    for (const auto& v : j["sigma"]) images.push_back(v.get<int>());
    auto lambdas = rat_vector_from_json(j["lambdas"]);
    int n = static_cast<int>(lambdas.size()) - 1;
    return GkElement(n, j["k"].get<long>(), matrix_from_json(j["m"]), std::move(lambdas),
                     Permutation(std::move(images)));
}

inline json to_json(const ConfigAut& c) {
    json sigma = json::array();
    for (int v : c.perm.images()) sigma.push_back(v);
    return json{{"m", matrix_to_json(c.moebius)}, {"sigma", sigma}};
}

inline json to_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const Int& f : g.torsion) torsion.push_back(f.get_str());
    return json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

inline json to_json(const CyclicMap& m) {
    return json{{"source", m.source_order.get_str()}, {"target", m.target_order.get_str()},
                {"multiplier", m.multiplier.get_str()}};
}

inline json to_json(const HyperellipticModel& m) { return json{{"g", m.g}, {"F", to_json(m.f)}}; }

inline json to_json(const WeightedPoint& p) {
    return json{{"x", rat_to_json(p.x)}, {"z", rat_to_json(p.z)}, {"y", rat_to_json(p.y)}};
}

inline WeightedPoint weighted_point_from_json(const json& j) {
    if (!j.contains("x") || !j.contains("z") || !j.contains("y"))
        throw ParseError("weighted point needs x, z, y");
    return WeightedPoint(rat_from_json(j["x"]), rat_from_json(j["z"]), rat_from_json(j["y"]));
}

inline json to_json(const ProjectiveLinePoint& p) {
    return json::array({rat_to_json(p.x), rat_to_json(p.y)});
}

inline json to_json(const Obstruction& o) {
    json factors = json::array();
    for (const auto& f : o.irreducible_factors) factors.push_back(to_json(f));
    return json{{"irreducible_factors", factors}};
}

} // namespace qp
