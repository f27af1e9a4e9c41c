// Exact star-chromatic-index computation by backtracking search, plus
// feasibility checks for a fixed k and simultaneous search for compatible
// coloring families.
//
// Search contract:
//   - edges are ordered once by a fixed connectivity-aware heuristic
//     (prefer edges with both endpoints already touched, then one, ties by
//     degree sum then index), so constraints propagate early;
//   - a partial coloring is extended only when the colored subgraph has no
//     properness or star violation, detected incrementally around the edge
//     just colored;
//   - color symmetry is broken by restricting every edge to colors at most
//     1 + the maximum color used on earlier edges;
//   - infeasibility is reported only when the search completed within its
//     budgets; a truncated search reports budget_exhausted instead.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "starlit/coloring.hpp"
#include "starlit/graph.hpp"
#include "starlit/verify.hpp"

namespace starlit {

struct SearchLimits {
    int max_colors = 0;  // cap for ascending exact search; 0 = edge count
    std::optional<std::int64_t> node_budget;
    std::optional<double> time_budget_seconds;
    int thread_hint = 1;  // accepted for API stability; search is deterministic

    void validate() const {
        if (node_budget && *node_budget <= 0) throw std::invalid_argument("node budget must be positive");
        if (time_budget_seconds && *time_budget_seconds <= 0)
            throw std::invalid_argument("time budget must be positive");
    }
};

enum class SolveStatus { exact, feasible, infeasible, budget_exhausted };

struct SolveResult {
    SolveStatus status = SolveStatus::budget_exhausted;
    std::optional<int> value;
    std::optional<EdgeColoring> witness;
    std::int64_t nodes_explored = 0;
};

struct FamilySearchResult {
    SolveStatus status = SolveStatus::budget_exhausted;
    std::optional<CompatibleFamily> witness;
    std::int64_t nodes_explored = 0;
};

namespace detail {

inline constexpr int kMaxSolverColors = 64;

// Fixed connectivity-aware edge order: grow from the densest edge,
// preferring edges whose endpoints are both already touched.
inline std::vector<int> search_order(const Graph& g) {
    const int ecount = g.edge_count();
    std::vector<int> order;
    order.reserve(ecount);
    std::vector<char> chosen(ecount, 0), touched(g.vertex_count, 0);
    auto deg_sum = [&](int e) { return g.degree(g.edges[e].first) + g.degree(g.edges[e].second); };
    for (int t = 0; t < ecount; ++t) {
        int best = -1, best_in = -1, best_deg = -1;
        for (int e = 0; e < ecount; ++e) {
            if (chosen[e]) continue;
            const int in_touched = (t == 0) ? 0 : touched[g.edges[e].first] + touched[g.edges[e].second];
            const int ds = deg_sum(e);
            if (in_touched > best_in || (in_touched == best_in && ds > best_deg)) {
                best = e;
                best_in = in_touched;
                best_deg = ds;
            }
        }
        chosen[best] = 1;
        touched[g.edges[best].first] = touched[g.edges[best].second] = 1;
        order.push_back(best);
    }
    return order;
}

struct Dist2Entry {
    int q;      // edge at line distance 2 from e
    int m;      // the middle edge connecting them
    int far_e;  // endpoint of e away from m
    int far_q;  // endpoint of q away from m
    int su, sw; // shared vertices e&m and m&q
};

inline std::vector<std::vector<Dist2Entry>> dist2_entries(const Graph& g) {
    std::vector<std::vector<Dist2Entry>> d2(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges[e];
        for (int side = 0; side < 2; ++side) {
            const int su = side == 0 ? a : b;
            const int far_e = side == 0 ? b : a;
            for (auto [sw, m] : g.adjacency[su]) {
                if (m == e || sw == far_e) continue;
                for (auto [far_q, q] : g.adjacency[sw]) {
                    if (q == m || q == e) continue;
                    if (far_q == su || far_q == far_e) continue;
                    d2[e].push_back({q, m, far_e, far_q, su, sw});
                }
            }
        }
    }
    return d2;
}

// Backtracking searcher shared by the single-coloring search (members = 1)
// and the compatible-family search (members = t).
class StarSearcher {
public:
    StarSearcher(const Graph& g, int k, int members)
        : g_(g),
          k_(k),
          members_(members),
          order_(search_order(g)),
          d2_(dist2_entries(g)),
          colors_(static_cast<std::size_t>(members) * g.edge_count(), -1),
          used_(g.vertex_count, 0) {
        if (k > kMaxSolverColors) throw std::invalid_argument("solver supports at most 64 colors");
        full_mask_ = k == 64 ? ~0ull : ((1ull << k) - 1);
    }

    SolveStatus run(const SearchLimits& lim) {
        start_ = std::chrono::steady_clock::now();
        lim_ = &lim;
        nodes_ = 0;
        aborted_ = false;
        if (g_.edge_count() == 0) return SolveStatus::feasible;
        if (k_ <= 0) return SolveStatus::infeasible;
        const bool found = dfs(0, -1);
        if (aborted_) return SolveStatus::budget_exhausted;
        return found ? SolveStatus::feasible : SolveStatus::infeasible;
    }

    std::int64_t nodes() const { return nodes_; }

    std::vector<int> member_colors(int i) const {
        std::vector<int> out(g_.edge_count());
        for (int e = 0; e < g_.edge_count(); ++e) out[e] = colors_[slot(i, e)];
        return out;
    }

private:
    std::size_t slot(int member, int edge) const {
        return static_cast<std::size_t>(member) * g_.edge_count() + edge;
    }
    int color_of(int member, int edge) const { return colors_[slot(member, edge)]; }

    // True iff setting (member, e) to its current color creates a bicolored
    // 4-path or 4-cycle among colored edges. Properness holds by masks.
    bool star_violation(int member, int e) const {
        const int c = color_of(member, e);
        // e as an end of a same-colored distance-2 pair
        for (const auto& t : d2_[e]) {
            if (color_of(member, t.q) != c || color_of(member, t.m) < 0) continue;
            const int b = color_of(member, t.m);
            for (auto [x, r] : g_.adjacency[t.far_q]) {
                if (r == t.q || color_of(member, r) != b) continue;
                if (x == t.far_e || (x != t.su && x != t.sw)) return true;
            }
            for (auto [y, s] : g_.adjacency[t.far_e]) {
                if (s == e || color_of(member, s) != b) continue;
                if (y == t.far_q || (y != t.su && y != t.sw)) return true;
            }
        }
        // e as the middle of a same-colored pair
        auto [u, w] = g_.edges[e];
        for (auto [pn, p] : g_.adjacency[u]) {
            if (p == e || color_of(member, p) < 0) continue;
            for (auto [qn, q] : g_.adjacency[w]) {
                if (q == e || q == p || color_of(member, q) != color_of(member, p)) continue;
                if (pn == qn || pn == w || qn == u) continue;
                for (auto [x, r] : g_.adjacency[qn]) {
                    if (r == q || color_of(member, r) != c) continue;
                    if (x == pn || (x != u && x != w)) return true;
                }
                for (auto [y, s] : g_.adjacency[pn]) {
                    if (s == p || color_of(member, s) != c) continue;
                    if (y == qn || (y != u && y != w)) return true;
                }
            }
        }
        return false;
    }

    bool out_of_budget() {
        if (lim_->node_budget && nodes_ > *lim_->node_budget) return true;
        if (lim_->time_budget_seconds && (nodes_ & 1023) == 0) {
            const double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            if (el > *lim_->time_budget_seconds) return true;
        }
        return false;
    }

    // Any uncolored edge whose endpoints jointly exclude all k colors can
    // never be colored; prune immediately.
    bool dead_neighbor(int u, int v) const {
        for (int z : {u, v})
            for (auto [w, f] : g_.adjacency[z]) {
                if ((used_[g_.edges[f].first] | used_[g_.edges[f].second]) != full_mask_) continue;
                for (int i = 0; i < members_; ++i)
                    if (color_of(i, f) < 0) return true;
            }
        return false;
    }

    bool dfs(int depth, int max_used) {
        if (depth == g_.edge_count() * members_) return true;
        const int e = order_[depth / members_];
        const int member = depth % members_;
        auto [u, v] = g_.edges[e];
        const std::uint64_t blocked = used_[u] | used_[v];
        // First slot of the first edge is fully symmetric; in family mode the
        // first edge's member colors are forced to 0..t-1.
        int lo = 0, hi = std::min(k_ - 1, max_used + 1);
        if (depth < members_) lo = hi = depth;
        for (int c = lo; c <= hi; ++c) {
            if (blocked & (1ull << c)) continue;
            ++nodes_;
            if (out_of_budget()) {
                aborted_ = true;
                return false;
            }
            colors_[slot(member, e)] = c;
            if (!star_violation(member, e)) {
                used_[u] |= 1ull << c;
                used_[v] |= 1ull << c;
                if (!dead_neighbor(u, v)) {
                    if (dfs(depth + 1, std::max(max_used, c))) return true;
                    if (aborted_) {
                        colors_[slot(member, e)] = -1;
                        used_[u] &= ~(1ull << c);
                        used_[v] &= ~(1ull << c);
                        return false;
                    }
                }
                used_[u] &= ~(1ull << c);
                used_[v] &= ~(1ull << c);
            }
            colors_[slot(member, e)] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    int members_;
    std::vector<int> order_;
    std::vector<std::vector<Dist2Entry>> d2_;
    std::vector<int> colors_;
    std::vector<std::uint64_t> used_;  // per vertex: colors used by any member
    std::uint64_t full_mask_ = 0;
    std::chrono::steady_clock::time_point start_;
    const SearchLimits* lim_ = nullptr;
    std::int64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace detail

// Decides whether g admits a star edge coloring with k colors.
inline SolveResult star_colorable_with_k(const Graph& g, int k, const SearchLimits& limits = {}) {
    if (k < 1) throw std::invalid_argument("k >= 1 required");
    limits.validate();
    detail::StarSearcher s(g, k, 1);
    SolveResult res;
    res.status = s.run(limits);
    res.nodes_explored = s.nodes();
    if (res.status == SolveStatus::feasible) {
        auto witness = make_edge_coloring(g, s.member_colors(0), k);
        // witnesses are re-checked, never trusted from the search
        if (!verify_star(g, witness).ok) throw std::logic_error("solver produced an invalid witness");
        res.witness = std::move(witness);
        res.value = k;
    }
    return res;
}

// Smallest k admitting a star edge coloring, searched upward from the
// degree lower bound. `exact` requires the k-1 refutation (or the lower
// bound itself) to have completed within budget.
inline SolveResult star_chromatic_index_exact(const Graph& g, const SearchLimits& limits = {}) {
    limits.validate();
    SolveResult total;
    if (g.edge_count() == 0) {
        total.status = SolveStatus::exact;
        total.value = 0;
        total.witness = make_edge_coloring(g, {}, 0);
        return total;
    }
    const int cap = limits.max_colors > 0 ? limits.max_colors : g.edge_count();
    for (int k = std::max(1, g.max_degree); k <= cap; ++k) {
        SolveResult step = star_colorable_with_k(g, k, limits);
        total.nodes_explored += step.nodes_explored;
        if (step.status == SolveStatus::budget_exhausted) {
            total.status = SolveStatus::budget_exhausted;
            return total;
        }
        if (step.status == SolveStatus::feasible) {
            total.status = SolveStatus::exact;
            total.value = k;
            total.witness = std::move(step.witness);
            return total;
        }
    }
    total.status = SolveStatus::infeasible;  // nothing within the color cap
    return total;
}

// Searches for t pairwise star compatible colorings out of k colors.
// Member symmetry is broken by forcing the first edge to colors 0..t-1
// (compatibility makes per-edge colors pairwise distinct, so every family
// can be normalized to this form).
inline FamilySearchResult find_compatible_family(const Graph& g, int k, int t,
                                                 const SearchLimits& limits = {}) {
    if (k < 1 || t < 1) throw std::invalid_argument("k, t >= 1 required");
    limits.validate();
    FamilySearchResult res;
    if (g.edge_count() > 0 && t > k) {
        res.status = SolveStatus::infeasible;
        return res;
    }
    detail::StarSearcher s(g, k, t);
    res.status = s.run(limits);
    res.nodes_explored = s.nodes();
    if (res.status == SolveStatus::feasible) {
        std::vector<std::vector<int>> members;
        members.reserve(t);
        for (int i = 0; i < t; ++i) members.push_back(s.member_colors(i));
        auto fam = make_family(g, std::move(members), k);
        if (!verify_compatible_family(g, fam).ok)
            throw std::logic_error("family search produced an invalid witness");
        res.witness = std::move(fam);
    }
    return res;
}

}  // namespace starlit
