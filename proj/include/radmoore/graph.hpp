#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radmoore {

class Graph;

// Mutable adjacency workspace; build() freezes it into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
        if (n < 1) throw std::invalid_argument("GraphBuilder: order must be positive");
    }

    explicit GraphBuilder(const Graph& g);

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check(u), check(v);
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check(u), check(v);
        if (u == v) throw std::invalid_argument("GraphBuilder: loops are not allowed");
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
    }

    void remove_edge(int u, int v) {
        check(u), check(v);
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(1ULL << (v % 64));
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(1ULL << (u % 64));
    }

    Graph build() const;

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("GraphBuilder: vertex out of range");
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;

    friend class Graph;
};

// Immutable simple undirected graph with one bitset row per vertex.
// All derived quantities are computed by pure functions, so instances are
// safe to share across threads.
class Graph {
public:
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
        if (n < 1) throw std::invalid_argument("Graph: order must be positive");
    }

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        GraphBuilder b(n);
        for (auto [u, v] : edges) b.add_edge(u, v);
        return b.build();
    }

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    int degree(int v) const {
        int d = 0;
        for (auto w : row(v)) d += std::popcount(w);
        return d;
    }

    long long edge_count() const {
        long long twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        out.reserve(16);
        auto r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bitsw = r[w];
            while (bitsw != 0) {
                int b = std::countr_zero(bitsw);
                out.push_back(w * 64 + b);
                bitsw &= bitsw - 1;
            }
        }
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    std::optional<int> regular_degree() const {
        int d = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != d) return std::nullopt;
        return d;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;

    friend class GraphBuilder;
};

inline GraphBuilder::GraphBuilder(const Graph& g) : n_(g.n_), words_(g.words_), bits_(g.bits_) {}

inline Graph GraphBuilder::build() const {
    Graph g(n_);
    g.bits_ = bits_;
    return g;
}

// The sets Gamma_i(root); layers partition the component containing root.
struct DistanceLayers {
    int root = 0;
    std::vector<std::vector<int>> layers;

    int eccentricity() const { return static_cast<int>(layers.size()) - 1; }

    int covered() const {
        int total = 0;
        for (const auto& l : layers) total += static_cast<int>(l.size());
        return total;
    }
};

inline DistanceLayers bfs_layers(const Graph& g, int root) {
    if (root < 0 || root >= g.order()) throw std::out_of_range("bfs_layers: root out of range");
    const int words = g.words_per_row();
    std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    frontier[root / 64] |= 1ULL << (root % 64);
    visited[root / 64] |= 1ULL << (root % 64);

    DistanceLayers out;
    out.root = root;
    out.layers.push_back({root});
    while (true) {
        std::fill(next.begin(), next.end(), 0);
        for (int v : out.layers.back()) {
            auto r = g.row(v);
            for (int w = 0; w < words; ++w) next[w] |= r[w];
        }
        std::vector<int> layer;
        for (int w = 0; w < words; ++w) {
            std::uint64_t fresh = next[w] & ~visited[w];
            visited[w] |= fresh;
            while (fresh != 0) {
                int b = std::countr_zero(fresh);
                layer.push_back(w * 64 + b);
                fresh &= fresh - 1;
            }
        }
        if (layer.empty()) break;
        out.layers.push_back(std::move(layer));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return bfs_layers(g, 0).covered() == g.order();
}

// Status s(v) = sum of distances from v to every vertex.
inline long long status(const Graph& g, int v) {
    DistanceLayers dl = bfs_layers(g, v);
    if (dl.covered() != g.order())
        throw std::invalid_argument("status: infinite status (graph is disconnected)");
    long long total = 0;
    for (std::size_t i = 1; i < dl.layers.size(); ++i)
        total += static_cast<long long>(i) * static_cast<long long>(dl.layers[i].size());
    return total;
}

// Vertex statuses compressed to (value, multiplicity) pairs, values strictly
// decreasing; total is the graph status (twice the Wiener index).
struct StatusVector {
    std::vector<std::pair<long long, int>> entries;
    long long total = 0;

    std::string to_string() const {
        std::string s;
        for (const auto& [val, mult] : entries) {
            if (!s.empty()) s += ",";
            s += "(" + std::to_string(val) + "," + std::to_string(mult) + ")";
        }
        return s;
    }
};

inline StatusVector status_vector(const Graph& g) {
    std::vector<long long> st(g.order());
    for (int v = 0; v < g.order(); ++v) st[v] = status(g, v);
    std::sort(st.begin(), st.end(), std::greater<>());
    StatusVector out;
    for (long long s : st) {
        if (!out.entries.empty() && out.entries.back().first == s)
            ++out.entries.back().second;
        else
            out.entries.emplace_back(s, 1);
        out.total += s;
    }
    return out;
}

inline std::vector<int> eccentricities(const Graph& g) {
    std::vector<int> out(g.order());
    for (int v = 0; v < g.order(); ++v) {
        DistanceLayers dl = bfs_layers(g, v);
        if (dl.covered() != g.order())
            throw std::invalid_argument("eccentricities: graph is disconnected");
        out[v] = dl.eccentricity();
    }
    return out;
}

inline std::pair<int, int> radius_diameter(const Graph& g) {
    std::vector<int> ecc = eccentricities(g);
    auto [mn, mx] = std::minmax_element(ecc.begin(), ecc.end());
    return {*mn, *mx};
}

struct RadialMooreReport {
    bool order_ok = false;
    bool regular_ok = false;
    bool connected = false;
    int radius = -1;
    int diameter = -1;
    bool is_radial_moore = false;
    std::vector<int> central_vertices;
    int noncentral_count = 0;
};

// Checks order M(d,k), d-regularity, radius k and diameter k+1.  Failures are
// report fields rather than exceptions.
inline RadialMooreReport verify_radial_moore(const Graph& g, int d, int k) {
    if (d < 3 || k < 2) throw std::invalid_argument("verify_radial_moore: need d >= 3 and k >= 2");
    RadialMooreReport rep;

    // Moore order, saturating well above any graph we can hold.
    long long moore = 1, term = d;
    bool overflow = false;
    for (int i = 0; i < k; ++i) {
        if (term > (1LL << 62) / std::max(d, 2)) { overflow = true; break; }
        moore += term;
        term *= (d - 1);
    }
    rep.order_ok = !overflow && g.order() == moore;
    rep.regular_ok = g.regular_degree() == d;
    rep.connected = is_connected(g);
    if (rep.connected) {
        std::vector<int> ecc = eccentricities(g);
        auto [mn, mx] = std::minmax_element(ecc.begin(), ecc.end());
        rep.radius = *mn;
        rep.diameter = *mx;
        for (int v = 0; v < g.order(); ++v)
            if (ecc[v] == rep.radius) rep.central_vertices.push_back(v);
        rep.noncentral_count = g.order() - static_cast<int>(rep.central_vertices.size());
    }
    rep.is_radial_moore = rep.order_ok && rep.regular_ok && rep.connected &&
                          rep.radius == k && rep.diameter == k + 1;
    return rep;
}

struct StructuralViolation {
    int vertex = -1;
    bool vertex_is_central = false;
    int noncentral_neighbors = 0;
};

// Neighborhood constraints every radial Moore graph must satisfy: a central
// vertex adjacent to a non-central vertex has at least two non-central
// neighbors, and every non-central vertex has at least two non-central
// neighbors.  Returns the list of offending vertices (empty when consistent).
inline std::vector<StructuralViolation> check_structural_props(const Graph& g, int k) {
    std::optional<int> d = g.regular_degree();
    if (!d) throw std::invalid_argument("check_structural_props: graph is not regular");
    RadialMooreReport rep = verify_radial_moore(g, *d, k);
    if (!rep.is_radial_moore)
        throw std::invalid_argument("check_structural_props: graph is not radial Moore for these parameters");

    std::vector<char> central(g.order(), 0);
    for (int v : rep.central_vertices) central[v] = 1;

    std::vector<StructuralViolation> out;
    for (int v = 0; v < g.order(); ++v) {
        int nc = 0;
        for (int u : g.neighbors(v))
            if (!central[u]) ++nc;
        if (central[v]) {
            if (nc >= 1 && nc < 2) out.push_back({v, true, nc});
        } else {
            if (nc < 2) out.push_back({v, false, nc});
        }
    }
    return out;
}

// Length of a shortest cycle; 0 when the graph is acyclic.
inline int girth(const Graph& g) {
    int best = 0;
    const int n = g.order();
    std::vector<int> dist(n), parent(n);
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<int> queue{src};
        dist[src] = 0;
        std::size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            if (best != 0 && 2 * dist[v] >= best) continue;
            for (int u : g.neighbors(v)) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (u != parent[v] && parent[u] != v) {
                    int cycle = dist[u] + dist[v] + 1;
                    if (best == 0 || cycle < best) best = cycle;
                }
            }
        }
    }
    return best;
}

inline bool is_automorphism(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (!g.has_edge(perm[u], perm[v])) return false;
    return true;
}

}  // namespace radmoore
