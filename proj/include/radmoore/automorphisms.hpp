#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace radmoore {

struct AutOptions {
    std::uint64_t max_nodes = 100'000'000;
};

class AutBudgetExceeded : public std::runtime_error {
public:
    AutBudgetExceeded(std::uint64_t nodes_visited, std::uint64_t partial)
        : std::runtime_error("automorphism search budget exceeded after " +
                             std::to_string(nodes_visited) + " nodes (" +
                             std::to_string(partial) + " automorphisms found so far)"),
          nodes(nodes_visited),
          partial_count(partial) {}
    std::uint64_t nodes;
    std::uint64_t partial_count;
};

namespace aut_detail {

// Map targets in an order that meets mapped vertices as early as possible, so
// wrong images die fast.
inline std::vector<int> constraint_order(const Graph& g, const std::vector<int>& colors) {
    const int n = g.order();
    std::vector<int> class_size(n, 0);
    for (int c : colors) ++class_size[c];

    std::vector<int> order;
    order.reserve(n);
    std::vector<char> placed(n, 0);
    for (int t = 0; t < n; ++t) {
        int best = -1, best_links = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : g.neighbors(v))
                if (placed[u]) ++links;
            if (best < 0 || links > best_links ||
                (links == best_links && class_size[colors[v]] < class_size[colors[best]]) ||
                (links == best_links && class_size[colors[v]] == class_size[colors[best]] && v < best)) {
                best = v;
                best_links = links;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

}  // namespace aut_detail

// Exact |Aut(g)| by backtracking: vertices are individualized in a fixed
// order after colouring by degree-refined distance profiles, and every
// colour- and adjacency-consistent bijection is counted once.
inline std::uint64_t automorphism_group_order(const Graph& g, AutOptions opts = {}) {
    const int n = g.order();
    if (!is_connected(g))
        throw std::invalid_argument("automorphism_group_order: graph must be connected");
    if (n == 1) return 1;

    const std::vector<int> colors = stable_coloring(g, distance_profile_coloring(g));
    const std::vector<int> order = aut_detail::constraint_order(g, colors);

    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    std::uint64_t count = 0, nodes = 0;

    auto rec = [&](auto&& self, int t) -> void {
        if (t == n) {
            ++count;
            return;
        }
        const int u = order[t];
        for (int w = 0; w < n; ++w) {
            if (used[w] || colors[w] != colors[u]) continue;
            if (++nodes > opts.max_nodes) throw AutBudgetExceeded(nodes, count);
            bool ok = true;
            for (int s = 0; s < t && ok; ++s)
                ok = g.has_edge(u, order[s]) == g.has_edge(w, img[order[s]]);
            if (!ok) continue;
            img[u] = w;
            used[w] = 1;
            self(self, t + 1);
            img[u] = -1;
            used[w] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace radmoore
