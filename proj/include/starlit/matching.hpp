// Bipartite perfect matching of left candidate sets into right elements,
// by augmenting paths (Kuhn's algorithm) in a fixed deterministic order.
// On failure the set of left vertices reachable by alternating paths from
// the stuck vertex is returned; its joint neighborhood is smaller than the
// set itself, so it is a Hall condition violator.
#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace starlit {

struct MatchingResult {
    bool ok = false;
    // ok: assignment[i] = element matched to left set i.
    std::vector<int> assignment;
    // !ok: indices of left sets forming a Hall violator.
    std::vector<int> hall_violator;
};

inline MatchingResult bipartite_perfect_matching(const std::vector<std::vector<int>>& left_sets,
                                                 const std::vector<int>& right_elements) {
    const int n = static_cast<int>(left_sets.size());
    std::unordered_map<int, int> right_index;
    for (int j = 0; j < static_cast<int>(right_elements.size()); ++j)
        right_index.emplace(right_elements[j], j);
    const int m = static_cast<int>(right_elements.size());

    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int x : left_sets[i]) {
            auto it = right_index.find(x);
            if (it != right_index.end()) adj[i].push_back(it->second);
        }

    std::vector<int> match_left(n, -1), match_right(m, -1);
    std::vector<char> visited(n);

    auto augment = [&](auto&& self, int i) -> bool {
        visited[i] = 1;
        for (int j : adj[i])
            if (match_right[j] < 0) {
                match_left[i] = j;
                match_right[j] = i;
                return true;
            }
        for (int j : adj[i])
            if (!visited[match_right[j]] && self(self, match_right[j])) {
                match_left[i] = j;
                match_right[j] = i;
                return true;
            }
        return false;
    };

    MatchingResult res;
    for (int i = 0; i < n; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(augment, i)) {
            for (int v = 0; v < n; ++v)
                if (visited[v]) res.hall_violator.push_back(v);
            return res;
        }
    }
    res.ok = true;
    res.assignment.resize(n);
    for (int i = 0; i < n; ++i) res.assignment[i] = right_elements[match_left[i]];
    return res;
}

}  // namespace starlit
