#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "canonical.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "recurrence.hpp"

namespace radmoore {

struct CensusNeedsStream : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankedGraph {
    std::string graph6;  // canonical form, stable across input labelings
    StatusVector sv;
    int central_count = 0;
};

struct CensusResult {
    int d = 0;
    int k = 0;
    long long total_regular = 0;  // connected d-regular graphs of order M(d,k) seen
    long long radial_moore = 0;
    int max_central = 0;
    std::vector<RankedGraph> ranking;
};

namespace census_detail {

struct RankKey {
    long long total;
    std::vector<long long> statuses;  // sorted descending
    std::string canon;

    bool operator<(const RankKey& o) const {
        if (total != o.total) return total < o.total;
        if (statuses != o.statuses) return statuses < o.statuses;
        return canon < o.canon;
    }
};

inline RankKey make_key(const StatusVector& sv, const std::string& canon) {
    RankKey key{sv.total, {}, canon};
    for (auto [val, mult] : sv.entries)
        key.statuses.insert(key.statuses.end(), static_cast<std::size_t>(mult), val);
    return key;
}

}  // namespace census_detail

// Orders graphs by total status ascending (closest to a Moore graph first);
// ties fall back to the descending-sorted status vector compared
// lexicographically, then to the canonical graph6 string.
inline std::vector<RankedGraph> rank_by_status(const std::vector<Graph>& graphs) {
    std::vector<std::pair<census_detail::RankKey, RankedGraph>> keyed;
    keyed.reserve(graphs.size());
    int order = -1;
    for (const Graph& g : graphs) {
        if (order < 0) order = g.order();
        if (g.order() != order)
            throw std::invalid_argument("rank_by_status: graphs must share one order");
        StatusVector sv = status_vector(g);  // throws on disconnected input
        std::vector<int> ecc = eccentricities(g);
        int radius = *std::min_element(ecc.begin(), ecc.end());
        int central = static_cast<int>(std::count(ecc.begin(), ecc.end(), radius));
        std::string canon = canonical_graph6(g);
        keyed.emplace_back(census_detail::make_key(sv, canon),
                           RankedGraph{std::move(canon), std::move(sv), central});
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RankedGraph> out;
    out.reserve(keyed.size());
    for (auto& [key, rg] : keyed) out.push_back(std::move(rg));
    return out;
}

// Filters a stream of graphs down to the radial Moore ones and collects the
// census statistics.  The stream is taken as isomorph-free; entries that are
// not connected d-regular graphs of order M(d,k) are skipped, not counted.
inline CensusResult census_stream(int d, int k,
                                  const std::function<std::optional<Graph>()>& next) {
    CensusResult result;
    result.d = d;
    result.k = k;
    const BigInt expected_order = moore_bound(d, k);

    std::vector<Graph> rm;
    for (std::optional<Graph> g = next(); g.has_value(); g = next()) {
        if (BigInt(g->order()) != expected_order) continue;
        if (g->regular_degree() != d || !is_connected(*g)) continue;
        ++result.total_regular;
        RadialMooreReport rep = verify_radial_moore(*g, d, k);
        if (!rep.is_radial_moore) continue;
        ++result.radial_moore;
        result.max_central =
            std::max(result.max_central, static_cast<int>(rep.central_vertices.size()));
        if (!check_structural_props(*g, k).empty())
            throw std::logic_error("census: radial Moore graph violates neighborhood constraints");
        rm.push_back(std::move(*g));
    }
    BigInt cap = d >= 4 ? central_upper_bound(d, k) : moore_bound(d, k);
    if (BigInt(result.max_central) > cap)
        throw std::logic_error("census: observed central count exceeds the proven bound");
    result.ranking = rank_by_status(rm);
    return result;
}

// Census backed by internal enumeration.  Certified for (3,2); anything
// larger must come in as an external graph6 stream.
inline CensusResult census(int d, int k) {
    if (!(d == 3 && k == 2))
        throw CensusNeedsStream(
            "census: internal enumeration is certified for (d,k) = (3,2) only; "
            "supply an external graph6 stream for larger parameters");
    std::vector<Graph> all = enumerate_regular(d, static_cast<int>(moore_bound(d, k).to_int64()));
    std::size_t at = 0;
    return census_stream(d, k, [&]() -> std::optional<Graph> {
        if (at >= all.size()) return std::nullopt;
        return all[at++];
    });
}

}  // namespace radmoore
