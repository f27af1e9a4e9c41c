// Immutable simple undirected graphs with product-aware labeling.
//
// Generators produce a fixed canonical vertex and edge order so that
// index-based color formulas (x, x+2i, the closing edge e_{n-1}, ...)
// apply literally:
//   - path_graph(n):  edges {x, x+1} for x = 0..n-2
//   - cycle_graph(n): edges {x, (x+1) mod n} for x = 0..n-1
//   - cartesian_product(G, H): vertex (a, x) -> a*|V(H)| + x; first all
//     G-axis edges grouped by H-vertex, then all H-axis edges grouped by
//     G-vertex
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace starlit {

enum class FactorKind { path, cycle };

struct Factor {
    FactorKind kind;
    int length;

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    // adjacency[v] = list of (neighbor, edge index), in edge-index order
    std::vector<std::vector<std::pair<int, int>>> adjacency;
    int max_degree = 0;
    // Product structure; empty for ad-hoc graphs loaded without factors.
    std::vector<Factor> factors;
    std::vector<int> edge_axis;  // per edge, the factor axis it runs along
    std::uint64_t fingerprint = 0;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
    bool has_factors() const { return !factors.empty(); }

    std::optional<int> find_edge(int u, int v) const {
        for (auto [w, e] : adjacency[u])
            if (w == v) return e;
        return std::nullopt;
    }

    // Row-major coordinate decode (first factor is the major axis).
    std::vector<int> coords(int v) const {
        if (factors.empty()) throw std::logic_error("graph has no product label");
        std::vector<int> c(factors.size());
        for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
            c[i] = v % factors[i].length;
            v /= factors[i].length;
        }
        return c;
    }

    int vertex_at(std::span<const int> c) const {
        if (c.size() != factors.size()) throw std::logic_error("coordinate arity mismatch");
        int v = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) v = v * factors[i].length + c[i];
        return v;
    }
};

namespace detail {

inline std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t structural_hash(int n, const std::vector<std::pair<int, int>>& edges) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, static_cast<std::uint64_t>(n));
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        h = fnv1a(h, (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v));
    }
    return h;
}

}  // namespace detail

// Builds a graph from an explicit edge list, validating simplicity.
inline Graph make_graph(int n, std::vector<std::pair<int, int>> edge_list,
                        std::vector<Factor> factors = {}, std::vector<int> edge_axis = {}) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.vertex_count = n;
    g.adjacency.resize(n);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edge_list.size() * 2);
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        auto [u, v] = edge_list[i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        std::uint64_t key = u < v ? (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v)
                                  : (static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint32_t>(u);
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
        g.adjacency[u].emplace_back(v, static_cast<int>(i));
        g.adjacency[v].emplace_back(u, static_cast<int>(i));
    }
    g.edges = std::move(edge_list);
    for (const auto& a : g.adjacency)
        g.max_degree = std::max(g.max_degree, static_cast<int>(a.size()));
    if (!factors.empty()) {
        if (edge_axis.size() != g.edges.size())
            throw std::invalid_argument("edge_axis length mismatch");
        g.factors = std::move(factors);
        g.edge_axis = std::move(edge_axis);
    }
    g.fingerprint = detail::structural_hash(n, g.edges);
    return g;
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n >= 1 required");
    std::vector<std::pair<int, int>> e;
    e.reserve(n - 1);
    for (int x = 0; x + 1 < n; ++x) e.emplace_back(x, x + 1);
    return make_graph(n, std::move(e), {{FactorKind::path, n}}, std::vector<int>(n - 1, 0));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    std::vector<std::pair<int, int>> e;
    e.reserve(n);
    for (int x = 0; x < n; ++x) e.emplace_back(x, (x + 1) % n);
    return make_graph(n, std::move(e), {{FactorKind::cycle, n}}, std::vector<int>(n, 0));
}

inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const std::int64_t nv = static_cast<std::int64_t>(g.vertex_count) * h.vertex_count;
    if (nv > 1 << 28) throw std::invalid_argument("cartesian_product: vertex count overflow");
    const int hn = h.vertex_count;
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<std::size_t>(g.edges.size()) * h.vertex_count +
              static_cast<std::size_t>(h.edges.size()) * g.vertex_count);
    std::vector<int> axis;
    const bool labeled = g.has_factors() && h.has_factors();
    if (labeled) axis.reserve(e.capacity());
    for (int x = 0; x < h.vertex_count; ++x)
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            auto [a, b] = g.edges[i];
            e.emplace_back(a * hn + x, b * hn + x);
            if (labeled) axis.push_back(g.edge_axis[i]);
        }
    const int goff = labeled ? static_cast<int>(g.factors.size()) : 0;
    for (int a = 0; a < g.vertex_count; ++a)
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            auto [x, y] = h.edges[i];
            e.emplace_back(a * hn + x, a * hn + y);
            if (labeled) axis.push_back(goff + h.edge_axis[i]);
        }
    std::vector<Factor> factors;
    if (labeled) {
        factors = g.factors;
        factors.insert(factors.end(), h.factors.begin(), h.factors.end());
    }
    return make_graph(static_cast<int>(nv), std::move(e), std::move(factors), std::move(axis));
}

// d-fold Cartesian power, left-associated.
inline Graph graph_power(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("graph_power: d >= 1 required");
    Graph acc = g;
    for (int i = 1; i < d; ++i) acc = cartesian_product(acc, g);
    return acc;
}

inline Graph grid_graph(const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("grid_graph: empty dims");
    for (int d : dims)
        if (d < 2) throw std::invalid_argument("grid_graph: dims >= 2 required");
    Graph acc = path_graph(dims[0]);
    for (std::size_t i = 1; i < dims.size(); ++i) acc = cartesian_product(acc, path_graph(dims[i]));
    return acc;
}

inline Graph hypercube(int d) {
    if (d < 1) throw std::invalid_argument("hypercube: d >= 1 required");
    return graph_power(path_graph(2), d);
}

inline Graph toroidal_graph(const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("toroidal_graph: empty dims");
    for (int d : dims)
        if (d < 3) throw std::invalid_argument("toroidal_graph: dims >= 3 required");
    Graph acc = cycle_graph(dims[0]);
    for (std::size_t i = 1; i < dims.size(); ++i) acc = cartesian_product(acc, cycle_graph(dims[i]));
    return acc;
}

}  // namespace starlit
