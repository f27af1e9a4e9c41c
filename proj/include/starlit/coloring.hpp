// Edge/vertex colorings and compatible families. Colorings are bound to a
// specific graph through its structural fingerprint; colors are palette
// indices 0..k-1 assigned per edge in the graph's canonical edge order.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "starlit/graph.hpp"

namespace starlit {

struct EdgeColoring {
    std::uint64_t graph_fingerprint = 0;
    int palette_size = 0;
    std::vector<int> colors;

    int color(int edge) const { return colors[edge]; }
};

struct VertexColoring {
    int palette_size = 0;
    std::vector<int> colors;
};

// t star edge colorings of one graph over a shared k-color palette,
// pairwise star compatible (disjoint incident color sets at every vertex).
struct CompatibleFamily {
    std::uint64_t graph_fingerprint = 0;
    int palette_size = 0;
    std::vector<EdgeColoring> colorings;

    int size() const { return static_cast<int>(colorings.size()); }
};

inline EdgeColoring make_edge_coloring(const Graph& g, std::vector<int> colors, int palette_size) {
    if (static_cast<int>(colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring length does not match edge count");
    if (palette_size < 0) throw std::invalid_argument("negative palette");
    return EdgeColoring{g.fingerprint, palette_size, std::move(colors)};
}

inline CompatibleFamily make_family(const Graph& g, std::vector<std::vector<int>> member_colors,
                                    int palette_size) {
    CompatibleFamily fam;
    fam.graph_fingerprint = g.fingerprint;
    fam.palette_size = palette_size;
    fam.colorings.reserve(member_colors.size());
    for (auto& mc : member_colors) fam.colorings.push_back(make_edge_coloring(g, std::move(mc), palette_size));
    return fam;
}

inline void require_bound(const Graph& g, const EdgeColoring& c) {
    if (c.graph_fingerprint != g.fingerprint)
        throw std::invalid_argument("coloring is bound to a different graph");
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring length does not match edge count");
}

inline void require_bound(const Graph& g, const CompatibleFamily& fam) {
    if (fam.graph_fingerprint != g.fingerprint)
        throw std::invalid_argument("family is bound to a different graph");
    for (const auto& c : fam.colorings) require_bound(g, c);
}

// Transfers a coloring between two graphs with identical vertex numbering
// and identical edge sets but possibly different canonical edge orders
// (e.g. differently associated products of the same factors).
inline EdgeColoring rebind_coloring(const Graph& from, const EdgeColoring& c, const Graph& to) {
    require_bound(from, c);
    if (from.vertex_count != to.vertex_count || from.edge_count() != to.edge_count())
        throw std::invalid_argument("rebind: graphs differ");
    std::vector<int> out(to.edge_count());
    for (int e = 0; e < from.edge_count(); ++e) {
        auto [u, v] = from.edges[e];
        auto idx = to.find_edge(u, v);
        if (!idx) throw std::invalid_argument("rebind: edge set mismatch");
        out[*idx] = c.colors[e];
    }
    return make_edge_coloring(to, std::move(out), c.palette_size);
}

// Transfers a coloring along an explicit vertex bijection (src vertex i of
// `from` plays the role of map[i] in `to`).
inline EdgeColoring rebind_coloring(const Graph& from, const EdgeColoring& c, const Graph& to,
                                    const std::vector<int>& vertex_map) {
    require_bound(from, c);
    if (static_cast<int>(vertex_map.size()) != from.vertex_count ||
        from.vertex_count != to.vertex_count || from.edge_count() != to.edge_count())
        throw std::invalid_argument("rebind: graphs differ");
    std::vector<int> out(to.edge_count());
    for (int e = 0; e < from.edge_count(); ++e) {
        auto [u, v] = from.edges[e];
        auto idx = to.find_edge(vertex_map[u], vertex_map[v]);
        if (!idx) throw std::invalid_argument("rebind: edge set mismatch under map");
        out[*idx] = c.colors[e];
    }
    return make_edge_coloring(to, std::move(out), c.palette_size);
}

}  // namespace starlit
