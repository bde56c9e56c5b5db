#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "parallel.hpp"

namespace radmoore {

struct SwapResult {
    std::pair<int, int> removed1, removed2;
    std::pair<int, int> added1, added2;
    int central_count = 0;  // vertices of eccentricity k after the swap
    bool is_radial_moore = false;
};

struct SwapSummary {
    std::uint64_t pairs_scanned = 0;    // unordered pairs of disjoint edges
    std::uint64_t rewirings_valid = 0;  // rewirings that keep the graph simple
    std::uint64_t radial_moore = 0;
    int max_central = 0;  // over radial Moore results
    std::optional<SwapResult> best;
};

namespace swap_detail {

// Eccentricities for orders up to 64, one adjacency word per vertex.
// Returns false when the graph is disconnected.
inline bool eccentricities64(const std::vector<std::uint64_t>& rows, int n, int* ecc) {
    const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
    for (int v = 0; v < n; ++v) {
        std::uint64_t visited = 1ULL << v;
        std::uint64_t frontier = visited;
        int e = 0;
        while (true) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f != 0) {
                int b = std::countr_zero(f);
                next |= rows[b];
                f &= f - 1;
            }
            std::uint64_t fresh = next & ~visited;
            if (fresh == 0) break;
            visited |= fresh;
            frontier = fresh;
            ++e;
        }
        if (visited != full) return false;
        ecc[v] = e;
    }
    return true;
}

struct Scanner {
    const Graph& base;
    int n, d, k;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint64_t> base_rows;
    bool order_regular_ok;  // order M(d,k) and d-regular, invariant under swaps

    Scanner(const Graph& g, int d_, int k_) : base(g), n(g.order()), d(d_), k(k_) {
        if (n > 64) throw std::invalid_argument("edge swap scan: order above 64 not supported");
        if (g.regular_degree() != d)
            throw std::invalid_argument("edge swap scan: graph is not d-regular");
        edges = g.edges();
        base_rows.resize(n);
        for (int v = 0; v < n; ++v) base_rows[v] = g.row(v)[0];
        long long moore = 1, term = d;
        for (int i = 0; i < k; ++i) {
            moore += term;
            term *= (d - 1);
        }
        order_regular_ok = (n == moore);
    }

    // Evaluates one rewiring; returns nothing when it breaks simplicity.
    std::optional<SwapResult> try_rewire(std::pair<int, int> e1, std::pair<int, int> e2,
                                         std::pair<int, int> a1, std::pair<int, int> a2) const {
        if (base.has_edge(a1.first, a1.second) || base.has_edge(a2.first, a2.second))
            return std::nullopt;
        std::vector<std::uint64_t> rows = base_rows;
        auto clear = [&](std::pair<int, int> e) {
            rows[e.first] &= ~(1ULL << e.second);
            rows[e.second] &= ~(1ULL << e.first);
        };
        auto set = [&](std::pair<int, int> e) {
            rows[e.first] |= 1ULL << e.second;
            rows[e.second] |= 1ULL << e.first;
        };
        clear(e1), clear(e2), set(a1), set(a2);

        SwapResult r{e1, e2, a1, a2, 0, false};
        int ecc[64] = {0};
        if (eccentricities64(rows, n, ecc)) {
            int radius = ecc[0], diameter = ecc[0];
            for (int v = 1; v < n; ++v) {
                radius = std::min(radius, ecc[v]);
                diameter = std::max(diameter, ecc[v]);
            }
            for (int v = 0; v < n; ++v)
                if (ecc[v] == k) ++r.central_count;
            r.is_radial_moore = order_regular_ok && radius == k && diameter == k + 1;
        }
        return r;
    }

    template <class Visit>
    void scan_range(std::uint64_t begin, std::uint64_t end, SwapSummary& sum, Visit&& visit) {
        const std::uint64_t m = edges.size();
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            // idx enumerates ordered pairs (i,j), i < j, row-major over i
            std::uint64_t i = idx / m, j = idx % m;
            if (j <= i) continue;
            auto [a, b] = edges[i];
            auto [c, dd] = edges[j];
            if (a == c || a == dd || b == c || b == dd) continue;
            ++sum.pairs_scanned;
            for (int variant = 0; variant < 2; ++variant) {
                std::pair<int, int> a1 = variant == 0 ? std::pair{a, c} : std::pair{a, dd};
                std::pair<int, int> a2 = variant == 0 ? std::pair{b, dd} : std::pair{b, c};
                auto res = try_rewire({a, b}, {c, dd}, a1, a2);
                if (!res) continue;
                ++sum.rewirings_valid;
                if (res->is_radial_moore) {
                    ++sum.radial_moore;
                    if (res->central_count > sum.max_central || !sum.best) {
                        sum.max_central = std::max(sum.max_central, res->central_count);
                        if (res->central_count == sum.max_central) sum.best = *res;
                    }
                }
                visit(*res);
            }
        }
    }
};

inline void merge(SwapSummary& into, const SwapSummary& part) {
    into.pairs_scanned += part.pairs_scanned;
    into.rewirings_valid += part.rewirings_valid;
    into.radial_moore += part.radial_moore;
    if (part.best && (!into.best || part.max_central > into.max_central))
        into.best = part.best;
    into.max_central = std::max(into.max_central, part.max_central);
}

}  // namespace swap_detail

// Visits every simple rewiring of every unordered pair of disjoint edges:
// removing {a,b},{c,d} and adding either {a,c},{b,d} or {a,d},{b,c}.
// Sequential, in deterministic pair order.
template <class Visit>
SwapSummary edge_swap_experiment(const Graph& g, int d, int k, Visit&& visit) {
    swap_detail::Scanner scanner(g, d, k);
    SwapSummary sum;
    const std::uint64_t m = scanner.edges.size();
    scanner.scan_range(0, m * m, sum, visit);
    return sum;
}

// Summary-only scan, parallel over the pair space with a deterministic merge.
inline SwapSummary swap_search(const Graph& g, int d, int k) {
    swap_detail::Scanner scanner(g, d, k);
    const std::uint64_t m = scanner.edges.size();
    const int chunks = worker_count() * 8;
    std::vector<SwapSummary> parts(static_cast<std::size_t>(chunks));
    parallel_chunks(m * m, chunks, [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
        scanner.scan_range(begin, end, parts[c], [](const SwapResult&) {});
    });
    SwapSummary sum;
    for (const auto& part : parts) swap_detail::merge(sum, part);
    return sum;
}

}  // namespace radmoore
