#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"

namespace radmoore {

// Iterated colour refinement: a vertex signature is its own colour followed
// by the sorted colours of its neighbours; repeat until the partition is
// stable.  Colours come back compact (0..c-1) in an isomorphism-invariant
// order.
inline std::vector<int> stable_coloring(const Graph& g, std::vector<int> colors = {}) {
    const int n = g.order();
    if (colors.empty()) colors.assign(n, 0);
    if (static_cast<int>(colors.size()) != n)
        throw std::invalid_argument("stable_coloring: colour vector size mismatch");

    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sigs;
        sigs.reserve(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{colors[v]};
            for (int u : g.neighbors(v)) s.push_back(colors[u]);
            std::sort(s.begin() + 1, s.end());
            sigs.emplace_back(std::move(s), v);
        }
        std::sort(sigs.begin(), sigs.end());
        std::vector<int> next(n);
        int rank = -1;
        for (std::size_t i = 0; i < sigs.size(); ++i) {
            if (i == 0 || sigs[i].first != sigs[i - 1].first) ++rank;
            next[sigs[i].second] = rank;
        }
        if (next == colors) return colors;
        colors = std::move(next);
    }
}

// Initial colours from the multiset of BFS layer sizes seen from each vertex.
inline std::vector<int> distance_profile_coloring(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> profiles(n);
    for (int v = 0; v < n; ++v) {
        DistanceLayers dl = bfs_layers(g, v);
        for (const auto& layer : dl.layers) profiles[v].push_back(static_cast<int>(layer.size()));
    }
    std::vector<std::vector<int>> sorted = profiles;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v)
        colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), profiles[v]) -
                                     sorted.begin());
    return colors;
}

enum class CanonDir { lex_min, lex_max };

struct CanonicalForm {
    std::vector<int> labeling;          // old index -> canonical index
    std::vector<std::uint8_t> code;     // packed upper-triangle bits, column order
    Graph graph;                        // the relabeled copy
};

namespace canon_detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Splits cells by neighbour counts towards every cell until equitable.  Cell
// order is part of the result and is derived only from isomorphism-invariant
// data (signature order), never from vertex numbers.
inline void refine_cells(const Graph& g, std::vector<std::vector<int>>& cells) {
    const int n = g.order();
    std::vector<int> cell_of(n);
    for (;;) {
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            for (int v : cells[ci]) cell_of[v] = static_cast<int>(ci);
        bool split = false;
        for (std::size_t ci = 0; ci < cells.size() && !split; ++ci) {
            if (cells[ci].size() <= 1) continue;
            std::vector<std::pair<std::vector<int>, int>> sigs;
            sigs.reserve(cells[ci].size());
            for (int v : cells[ci]) {
                std::vector<int> cnt(cells.size(), 0);
                for (int u : g.neighbors(v)) ++cnt[cell_of[u]];
                sigs.emplace_back(std::move(cnt), v);
            }
            std::stable_sort(sigs.begin(), sigs.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            if (sigs.front().first != sigs.back().first) {
                std::vector<std::vector<int>> groups;
                for (std::size_t i = 0; i < sigs.size(); ++i) {
                    if (i == 0 || sigs[i].first != sigs[i - 1].first) groups.emplace_back();
                    groups.back().push_back(sigs[i].second);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci),
                             std::make_move_iterator(groups.begin()),
                             std::make_move_iterator(groups.end()));
                split = true;
            }
        }
        if (!split) return;
    }
}

// Individualization-refinement search for the extreme adjacency code.
// Discovered automorphisms (equal-code leaves) merge candidate orbits so
// symmetric graphs do not explode the tree.
struct CanonEngine {
    const Graph& g;
    int n;
    bool maximize;

    std::vector<std::uint8_t> best_code;
    std::vector<int> best_at;  // canonical position -> old vertex
    bool have_best = false;
    std::vector<std::vector<int>> auts;
    std::uint64_t nodes = 0;

    static constexpr std::uint64_t kMaxNodes = 50'000'000;
    static constexpr std::size_t kMaxStoredAuts = 256;

    explicit CanonEngine(const Graph& graph, bool max)
        : g(graph), n(graph.order()), maximize(max) {}

    std::vector<std::uint8_t> pack(const std::vector<int>& at) const {
        std::vector<std::uint8_t> code(
            (static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
        std::size_t bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (g.has_edge(at[i], at[j]))
                    code[bit >> 3] |= static_cast<std::uint8_t>(0x80u >> (bit & 7));
        return code;
    }

    void run() {
        std::vector<std::vector<int>> cells(1);
        cells[0].resize(n);
        std::iota(cells[0].begin(), cells[0].end(), 0);
        std::vector<int> path;
        search(cells, path);
    }

    void search(std::vector<std::vector<int>> cells, std::vector<int>& path) {
        if (++nodes > kMaxNodes) throw std::runtime_error("canonical_form: search budget exceeded");
        refine_cells(g, cells);

        std::size_t target = cells.size();
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            if (cells[ci].size() > 1) {
                target = ci;
                break;
            }

        if (target == cells.size()) {  // discrete
            std::vector<int> at(n);
            for (int i = 0; i < n; ++i) at[i] = cells[i][0];
            std::vector<std::uint8_t> code = pack(at);
            if (!have_best) {
                best_code = std::move(code);
                best_at = std::move(at);
                have_best = true;
                return;
            }
            int c = code.empty() ? 0 : std::memcmp(code.data(), best_code.data(), code.size());
            bool better = maximize ? c > 0 : c < 0;
            if (better) {
                best_code = std::move(code);
                best_at = std::move(at);
            } else if (c == 0 && auts.size() < kMaxStoredAuts) {
                // position p holds best_at[p] in the best leaf and at[p] here:
                // mapping at[p] -> best_at[p] preserves adjacency.
                std::vector<int> sigma(n);
                for (int p = 0; p < n; ++p) sigma[at[p]] = best_at[p];
                auts.push_back(std::move(sigma));
            }
            return;
        }

        const std::vector<int> cand = cells[target];
        std::vector<int> tried;
        for (int v : cand) {
            if (!tried.empty() && in_tried_orbit(v, tried, path)) continue;
            tried.push_back(v);
            std::vector<std::vector<int>> child = cells;
            child[target] = {v};
            std::vector<int> rest;
            rest.reserve(cand.size() - 1);
            for (int u : cand)
                if (u != v) rest.push_back(u);
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
            path.push_back(v);
            search(std::move(child), path);
            path.pop_back();
        }
    }

    // Orbit pruning: skip v when an automorphism fixing the individualized
    // path pointwise links it to an already-expanded sibling.
    bool in_tried_orbit(int v, const std::vector<int>& tried, const std::vector<int>& path) {
        if (auts.empty()) return false;
        UnionFind uf(n);
        for (const auto& sigma : auts) {
            bool fixes = true;
            for (int p : path)
                if (sigma[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < n; ++x) uf.unite(x, sigma[x]);
        }
        for (int u : tried)
            if (uf.find(u) == uf.find(v)) return true;
        return false;
    }
};

}  // namespace canon_detail

inline CanonicalForm canonical_form(const Graph& g, CanonDir dir = CanonDir::lex_min) {
    canon_detail::CanonEngine engine(g, dir == CanonDir::lex_max);
    engine.run();
    CanonicalForm out{std::vector<int>(g.order()), std::move(engine.best_code), Graph(g.order())};
    GraphBuilder b(g.order());
    for (int pos = 0; pos < g.order(); ++pos) out.labeling[engine.best_at[pos]] = pos;
    for (auto [u, v] : g.edges()) b.add_edge(out.labeling[u], out.labeling[v]);
    out.graph = b.build();
    return out;
}

inline std::string canonical_graph6(const Graph& g) {
    return graph6_encode(canonical_form(g, CanonDir::lex_min).graph);
}

// True iff no relabeling of g yields a lexicographically larger adjacency
// code than the identity labeling (column-order upper triangle, as in
// graph6).  Unlike canonical_form this decides maximality over the whole
// symmetric group, which is what the orderly generator needs: deleting the
// last edge of a lexmax-labeled graph leaves a lexmax-labeled graph.
//
// The search assigns canonical positions one vertex at a time and only
// follows assignments whose code prefix ties the identity's; candidates that
// are twins of an already-tried sibling are skipped, which keeps graphs with
// many isolated or pendant vertices from blowing up the tree.
inline bool is_lexmax_labeling(const Graph& g) {
    const int n = g.order();
    const int words = g.words_per_row();

    std::vector<char> twin(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool same = true;
            auto ru = g.row(u), rv = g.row(v);
            for (int w = 0; w < words && same; ++w) {
                std::uint64_t mask = ~0ULL;
                if (u / 64 == w) mask &= ~(1ULL << (u % 64));
                if (v / 64 == w) mask &= ~(1ULL << (v % 64));
                same = (ru[w] & mask) == (rv[w] & mask);
            }
            twin[static_cast<std::size_t>(u) * n + v] = twin[static_cast<std::size_t>(v) * n + u] =
                same ? 1 : 0;
        }

    std::vector<int> chosen;
    chosen.reserve(n);
    std::vector<char> used(n, 0);

    auto rec = [&](auto&& self, int t) -> bool {
        if (t == n) return true;  // code equal to identity: an automorphism
        std::vector<int> tried;
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            bool dup = false;
            for (int u : tried)
                if (twin[static_cast<std::size_t>(u) * n + c]) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            int cmp = 0;
            for (int s = 0; s < t; ++s) {
                bool cb = g.has_edge(chosen[s], c);
                bool ib = g.has_edge(s, t);
                if (cb != ib) {
                    cmp = cb ? 1 : -1;
                    break;
                }
            }
            if (cmp > 0) return false;  // strictly larger labeling exists
            tried.push_back(c);
            if (cmp == 0) {
                chosen.push_back(c);
                used[c] = 1;
                bool ok = self(self, t + 1);
                chosen.pop_back();
                used[c] = 0;
                if (!ok) return false;
            }
        }
        return true;
    };
    return rec(rec, 0);
}

}  // namespace radmoore
