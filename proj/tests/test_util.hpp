#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <radmoore/canonical.hpp>
#include <radmoore/graph.hpp>

namespace testutil {

inline radmoore::Graph petersen() {
    radmoore::GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);          // outer pentagon
        b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        b.add_edge(i, 5 + i);                // spokes
    }
    return b.build();
}

inline radmoore::Graph cycle(int n) {
    radmoore::GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

inline radmoore::Graph complete(int n) {
    radmoore::GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

inline radmoore::Graph path(int n) {
    radmoore::GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

inline radmoore::Graph star(int leaves) {
    radmoore::GraphBuilder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
    return b.build();
}

inline radmoore::Graph complete_bipartite_33() {
    radmoore::GraphBuilder b(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) b.add_edge(i, j);
    return b.build();
}

inline radmoore::Graph prism() {
    radmoore::GraphBuilder b(6);
    for (int i = 0; i < 3; ++i) {
        b.add_edge(i, (i + 1) % 3);
        b.add_edge(3 + i, 3 + (i + 1) % 3);
        b.add_edge(i, 3 + i);
    }
    return b.build();
}

inline radmoore::Graph random_graph(std::mt19937& rng, int n, double p) {
    radmoore::GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return b.build();
}

inline radmoore::Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    for (;;) {
        radmoore::Graph g = random_graph(rng, n, p);
        if (radmoore::is_connected(g)) return g;
    }
}

inline radmoore::Graph relabel(const radmoore::Graph& g, const std::vector<int>& perm) {
    radmoore::GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return b.build();
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Position-by-position isomorphism backtracking; independent of the
// refinement machinery under test.
inline bool brute_force_isomorphic(const radmoore::Graph& a, const radmoore::Graph& b) {
    if (a.order() != b.order()) return false;
    const int n = a.order();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) da[v] = a.degree(v), db[v] = b.degree(v);
    {
        std::vector<int> sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int t) -> bool {
        if (t == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || da[t] != db[w]) continue;
            bool ok = true;
            for (int s = 0; s < t && ok; ++s)
                ok = a.has_edge(t, s) == b.has_edge(w, img[s]);
            if (!ok) continue;
            img[t] = w;
            used[w] = 1;
            if (self(self, t + 1)) return true;
            img[t] = -1;
            used[w] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

// Plain automorphism counting with no colour pruning at all.
inline long long naive_automorphism_count(const radmoore::Graph& g) {
    const int n = g.order();
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    long long count = 0;
    auto rec = [&](auto&& self, int t) -> void {
        if (t == n) {
            ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.degree(t) != g.degree(w)) continue;
            bool ok = true;
            for (int s = 0; s < t && ok; ++s)
                ok = g.has_edge(t, s) == g.has_edge(w, img[s]);
            if (!ok) continue;
            img[t] = w;
            used[w] = 1;
            self(self, t + 1);
            img[t] = -1;
            used[w] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

// Independent enumeration oracle: every labeled d-regular graph on n
// vertices whose vertex-0 neighborhood is exactly {1,...,d} (every
// isomorphism class has such a labeling), deduplicated by canonical code.
// The generation path shares nothing with the orderly generator.
inline std::set<std::string> labeled_regular_classes(int d, int n, bool connected_only) {
    std::set<std::string> classes;
    radmoore::GraphBuilder b(n);
    std::vector<int> deg(n, 0);
    for (int v = 1; v <= d; ++v) {
        b.add_edge(0, v);
        ++deg[0], ++deg[v];
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    auto rec = [&](auto&& self, std::size_t at) -> void {
        if (at == pairs.size()) {
            for (int v = 0; v < n; ++v)
                if (deg[v] != d) return;
            radmoore::Graph g = b.build();
            if (connected_only && !radmoore::is_connected(g)) return;
            classes.insert(radmoore::canonical_graph6(g));
            return;
        }
        auto [i, j] = pairs[at];
        // row-major pair order: vertex i sees no pairs after its row ends
        int remaining_for_i = 0;
        for (std::size_t q = at; q < pairs.size(); ++q)
            if (pairs[q].first == i || pairs[q].second == i) ++remaining_for_i;
        if (deg[i] + remaining_for_i < d) return;

        self(self, at + 1);
        if (deg[i] < d && deg[j] < d) {
            b.add_edge(i, j);
            ++deg[i], ++deg[j];
            self(self, at + 1);
            b.remove_edge(i, j);
            --deg[i], --deg[j];
        }
    };
    rec(rec, 0);
    return classes;
}

// Direct all-pairs distance sum via repeated BFS; the independent route for
// status-vector totals.
inline long long all_pairs_distance_sum(const radmoore::Graph& g) {
    long long total = 0;
    for (int v = 0; v < g.order(); ++v) {
        radmoore::DistanceLayers dl = radmoore::bfs_layers(g, v);
        for (std::size_t i = 1; i < dl.layers.size(); ++i)
            total += static_cast<long long>(i) * static_cast<long long>(dl.layers[i].size());
    }
    return total;
}

}  // namespace testutil
