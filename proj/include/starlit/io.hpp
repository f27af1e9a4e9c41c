// JSON and DOT serialization.
//
// Graph JSON:    {"n": <int>, "edges": [[u,v],...],
//                 "factors": [{"kind":"path"|"cycle","len":<int>},...]}   (factors optional)
// Coloring JSON: {"k": <int>, "colors": [c_0, c_1, ...]}   in canonical edge order
// Family JSON:   {"k": <int>, "t": <int>, "colorings": [[...],...]}
//
// DOT edges carry label=<color> and a drawing color from a fixed 10-entry
// palette; palette indices >= 10 fall back to labels only.
#pragma once

#include <array>
#include <sstream>
#include <string>

#include <json.hpp>

#include "starlit/coloring.hpp"
#include "starlit/graph.hpp"
#include "starlit/verify.hpp"

namespace starlit {

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count;
    auto& edges = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    if (g.has_factors()) {
        auto& factors = j["factors"] = nlohmann::json::array();
        for (const auto& f : g.factors)
            factors.push_back({{"kind", f.kind == FactorKind::path ? "path" : "cycle"},
                               {"len", f.length}});
    }
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<Factor> factors;
    if (j.contains("factors")) {
        for (const auto& f : j.at("factors")) {
            const std::string kind = f.at("kind").get<std::string>();
            if (kind != "path" && kind != "cycle") throw std::invalid_argument("unknown factor kind");
            factors.push_back({kind == "path" ? FactorKind::path : FactorKind::cycle,
                               f.at("len").get<int>()});
        }
        // Reconstruct the labeled graph from its factors and check the edge
        // list matches; a factors field inconsistent with the edges is an error.
        Graph built = factors[0].kind == FactorKind::path ? path_graph(factors[0].length)
                                                          : cycle_graph(factors[0].length);
        for (std::size_t i = 1; i < factors.size(); ++i)
            built = cartesian_product(built, factors[i].kind == FactorKind::path
                                                 ? path_graph(factors[i].length)
                                                 : cycle_graph(factors[i].length));
        const Graph plain = make_graph(n, edges);
        if (plain.fingerprint != built.fingerprint || plain.edges != built.edges)
            throw std::invalid_argument("factors do not match edge list");
        return built;
    }
    return make_graph(n, std::move(edges));
}

inline nlohmann::json coloring_to_json(const EdgeColoring& c) {
    return nlohmann::json{{"k", c.palette_size}, {"colors", c.colors}};
}

inline EdgeColoring coloring_from_json(const Graph& g, const nlohmann::json& j) {
    return make_edge_coloring(g, j.at("colors").get<std::vector<int>>(), j.at("k").get<int>());
}

inline nlohmann::json family_to_json(const CompatibleFamily& fam) {
    nlohmann::json j;
    j["k"] = fam.palette_size;
    j["t"] = fam.size();
    auto& cs = j["colorings"] = nlohmann::json::array();
    for (const auto& c : fam.colorings) cs.push_back(c.colors);
    return j;
}

inline CompatibleFamily family_from_json(const Graph& g, const nlohmann::json& j) {
    return make_family(g, j.at("colorings").get<std::vector<std::vector<int>>>(),
                       j.at("k").get<int>());
}

inline nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["ok"] = rep.ok;
    if (rep.ok) return j;
    switch (rep.kind) {
        case FailureKind::improper_edge_pair: j["failure"] = "improper-edge-pair"; break;
        case FailureKind::bicolored_4path: j["failure"] = "bicolored-4path"; break;
        case FailureKind::bicolored_4cycle: j["failure"] = "bicolored-4cycle"; break;
        case FailureKind::compat_overlap: j["failure"] = "compat-overlap"; break;
        case FailureKind::palette_overflow: j["failure"] = "palette-overflow"; break;
    }
    nlohmann::json w;
    if (!rep.witness.vertices.empty()) w["vertices"] = rep.witness.vertices;
    if (!rep.witness.edges.empty()) w["edges"] = rep.witness.edges;
    if (!rep.witness.colors.empty()) w["colors"] = rep.witness.colors;
    if (rep.witness.member_i >= 0) w["member_i"] = rep.witness.member_i;
    if (rep.witness.member_j >= 0) w["member_j"] = rep.witness.member_j;
    if (rep.witness.vertex >= 0) w["vertex"] = rep.witness.vertex;
    if (rep.witness.color >= 0) w["color"] = rep.witness.color;
    j["witness"] = std::move(w);
    return j;
}

inline const std::array<const char*, 10>& dot_palette() {
    static const std::array<const char*, 10> p = {
        "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
        "#42d4f4", "#f032e6", "#9a6324", "#800000", "#000075"};
    return p;
}

inline std::string dot_export(const Graph& g, const EdgeColoring* coloring = nullptr) {
    if (coloring) require_bound(g, *coloring);
    std::ostringstream os;
    os << "graph starlit {\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        os << "  " << v;
        if (g.has_factors()) {
            auto c = g.coords(v);
            os << " [label=\"(";
            for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
            os << ")\"]";
        }
        os << ";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        os << "  " << u << " -- " << v;
        if (coloring) {
            const int c = coloring->colors[e];
            os << " [label=\"" << c << '"';
            if (c >= 0 && c < 10) os << ", color=\"" << dot_palette()[c] << '"';
            os << ']';
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace starlit
