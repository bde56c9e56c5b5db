#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace radmoore {

struct EnumOptions {
    std::uint64_t max_nodes = 2'000'000'000;
};

struct EnumStats {
    std::uint64_t nodes = 0;
    std::uint64_t emitted = 0;
    bool complete = true;
};

namespace enum_detail {

struct OrderlyGen {
    int n, d, target_m, total_positions;
    std::vector<std::pair<int, int>> pair_at;   // column-order positions
    std::vector<std::vector<int>> future_cnt;   // [v][p]: positions > p touching v
    GraphBuilder cur;
    std::vector<int> deg;
    const std::function<void(const Graph&)>& emit;
    EnumOptions opts;
    EnumStats stats;

    OrderlyGen(int n_, int d_, const std::function<void(const Graph&)>& emit_, EnumOptions opts_)
        : n(n_), d(d_), target_m(d_ * n_ / 2), total_positions(n_ * (n_ - 1) / 2),
          cur(n_), deg(n_, 0), emit(emit_), opts(opts_) {
        pair_at.reserve(total_positions);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) pair_at.emplace_back(i, j);
        future_cnt.assign(n, std::vector<int>(total_positions + 1, 0));
        for (int p = total_positions - 1; p >= 0; --p) {
            for (int v = 0; v < n; ++v) future_cnt[v][p] = future_cnt[v][p + 1];
            ++future_cnt[pair_at[p].first][p];
            ++future_cnt[pair_at[p].second][p];
        }
    }

    // Necessary conditions for some descendant to reach d-regularity: every
    // vertex still has enough untried positions, and enough positions remain
    // whose endpoints are both unsaturated.
    bool feasible(int p, int m) const {
        int remaining = target_m - m;
        for (int v = 0; v < n; ++v)
            if (d - deg[v] > future_cnt[v][p + 1]) return false;
        int usable = 0;
        for (int q = p + 1; q < total_positions && usable < remaining; ++q) {
            auto [x, y] = pair_at[q];
            if (deg[x] < d && deg[y] < d) ++usable;
        }
        return usable >= remaining;
    }

    void rec(int last, int m) {
        if (!stats.complete) return;
        if (++stats.nodes > opts.max_nodes) {
            stats.complete = false;
            return;
        }
        if (m == target_m) {
            Graph g = cur.build();
            if (is_connected(g)) {
                ++stats.emitted;
                emit(g);
            }
            return;
        }
        for (int p = last + 1; p < total_positions; ++p) {
            auto [i, j] = pair_at[p];
            if (deg[i] >= d || deg[j] >= d) continue;
            cur.add_edge(i, j);
            ++deg[i];
            ++deg[j];
            if (feasible(p, m + 1) && is_lexmax_labeling(cur.build())) rec(p, m + 1);
            cur.remove_edge(i, j);
            --deg[i];
            --deg[j];
            if (!stats.complete) return;
        }
    }
};

}  // namespace enum_detail

// Isomorph-free stream of the connected d-regular graphs on n vertices.
//
// Orderly generation: partial graphs grow one edge at a time in column-order
// position order, and a partial graph survives only when its labeling is
// lexicographically maximal over all relabelings.  Deleting the last edge of
// a lexmax-labeled graph leaves a lexmax-labeled graph, so every class is
// built along exactly one path.  Connectivity is filtered at emission since
// it is not preserved under edge deletion.
inline EnumStats enumerate_regular(int d, int n,
                                   const std::function<void(const Graph&)>& emit,
                                   EnumOptions opts = {}) {
    if (d < 1 || n < 2) throw std::invalid_argument("enumerate_regular: need d >= 1 and n >= 2");
    if (n <= d) throw std::invalid_argument("enumerate_regular: need n > d");
    if ((static_cast<long long>(d) * n) % 2 != 0)
        throw std::invalid_argument("enumerate_regular: d*n must be even");
    enum_detail::OrderlyGen gen(n, d, emit, opts);
    gen.rec(-1, 0);
    return gen.stats;
}

// Convenience form; throws when the node budget cuts the stream short.
inline std::vector<Graph> enumerate_regular(int d, int n, EnumOptions opts = {}) {
    std::vector<Graph> out;
    EnumStats stats = enumerate_regular(
        d, n, [&](const Graph& g) { out.push_back(g); }, opts);
    if (!stats.complete)
        throw std::runtime_error("enumerate_regular: node budget exceeded, stream incomplete");
    return out;
}

}  // namespace radmoore
