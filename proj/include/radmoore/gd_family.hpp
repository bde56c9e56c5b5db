#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "graph.hpp"

namespace radmoore {

// Vertex labels of the G_d family: the star center, the d spoke vertices, and
// the d(d-1) vertices (i,j) of the complete-graph copies H_i.
struct GdVertex {
    enum class Kind { center, spoke, clique };
    Kind kind = Kind::center;
    int i = 0;
    int j = 0;

    static GdVertex center() { return {}; }
    static GdVertex spoke(int i) { return {Kind::spoke, i, 0}; }
    static GdVertex clique(int i, int j) { return {Kind::clique, i, j}; }

    std::string to_string() const {
        switch (kind) {
            case Kind::center: return "0";
            case Kind::spoke: return std::to_string(i);
            default: return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    }
};

inline int gd_order(int d) { return d * d + 1; }

// Center is index 0, spoke i is index i, clique vertices follow in
// lexicographic (i,j) order.
inline int gd_index(int d, const GdVertex& v) {
    switch (v.kind) {
        case GdVertex::Kind::center:
            return 0;
        case GdVertex::Kind::spoke:
            if (v.i < 1 || v.i > d) throw std::out_of_range("gd_index: spoke out of range");
            return v.i;
        default: {
            if (v.i < 1 || v.i > d || v.j < 1 || v.j > d || v.i == v.j)
                throw std::out_of_range("gd_index: clique label out of range");
            int rank = v.j < v.i ? v.j - 1 : v.j - 2;
            return d + 1 + (v.i - 1) * (d - 1) + rank;
        }
    }
}

inline GdVertex gd_vertex(int d, int idx) {
    if (idx < 0 || idx > d * d) throw std::out_of_range("gd_vertex: index out of range");
    if (idx == 0) return GdVertex::center();
    if (idx <= d) return GdVertex::spoke(idx);
    int off = idx - d - 1;
    int i = off / (d - 1) + 1;
    int rank = off % (d - 1);
    int j = rank + 1 >= i ? rank + 2 : rank + 1;
    return GdVertex::clique(i, j);
}

struct GdGraph {
    int d = 0;
    Graph graph;
};

// Three-step construction: d copies of K_{d-1}, the matching (i,k) ~ (k,i)
// between copies, and the star K_{1,d} whose spoke i is joined to every
// vertex of H_i.
inline GdGraph build_gd(int d) {
    if (d < 3) throw std::domain_error("build_gd: degree must be at least 3");
    GraphBuilder b(gd_order(d));
    for (int i = 1; i <= d; ++i) {
        b.add_edge(0, gd_index(d, GdVertex::spoke(i)));
        for (int j = 1; j <= d; ++j) {
            if (j == i) continue;
            int vij = gd_index(d, GdVertex::clique(i, j));
            b.add_edge(gd_index(d, GdVertex::spoke(i)), vij);
            for (int j2 = j + 1; j2 <= d; ++j2)
                if (j2 != i) b.add_edge(vij, gd_index(d, GdVertex::clique(i, j2)));
            if (j > i) b.add_edge(vij, gd_index(d, GdVertex::clique(j, i)));
        }
    }
    return {d, b.build()};
}

// Total status 3d^4 - 4d^3 + 4d^2 - d, i.e. one vertex with the Moore status
// 2d^2 - d and d^2 vertices with status 3d^2 - 4d + 2.
inline BigInt gd_total_status(int d) {
    if (d < 3) throw std::domain_error("gd_total_status: degree must be at least 3");
    BigInt D(d);
    BigInt d2 = D * D;
    return BigInt(3) * d2 * d2 - BigInt(4) * d2 * D + BigInt(4) * d2 - D;
}

struct GdVerification {
    int d = 0;
    bool order_ok = false;
    bool regular_ok = false;
    int radius = -1;
    int diameter = -1;
    std::vector<int> central;
    StatusVector sv;
    BigInt total_status;
    bool status_vector_ok = false;
    bool ok = false;
};

inline GdVerification verify_gd(int d) {
    GdGraph gd = build_gd(d);
    GdVerification v;
    v.d = d;
    v.order_ok = gd.graph.order() == gd_order(d);
    v.regular_ok = gd.graph.regular_degree() == d;
    auto [radius, diameter] = radius_diameter(gd.graph);
    v.radius = radius;
    v.diameter = diameter;
    std::vector<int> ecc = eccentricities(gd.graph);
    for (int u = 0; u < gd.graph.order(); ++u)
        if (ecc[u] == radius) v.central.push_back(u);
    v.sv = status_vector(gd.graph);
    v.total_status = BigInt(v.sv.total);
    long long noncentral_status = 3LL * d * d - 4LL * d + 2;
    long long central_status = 2LL * d * d - d;
    v.status_vector_ok = v.sv.entries.size() == 2 &&
                         v.sv.entries[0] == std::pair<long long, int>(noncentral_status, d * d) &&
                         v.sv.entries[1] == std::pair<long long, int>(central_status, 1);
    v.ok = v.order_ok && v.regular_ok && v.radius == 2 && v.diameter == 3 &&
           v.central == std::vector<int>{0} && v.status_vector_ok &&
           v.total_status == gd_total_status(d);
    return v;
}

// The automorphism induced by the transposition (i j) of spoke labels: the
// center is fixed, spokes i and j swap, and (a,b) maps to the transposed pair.
inline std::vector<int> transposition_map(int d, int i, int j) {
    if (i == j) throw std::invalid_argument("transposition_map: indices must differ");
    if (i < 1 || i > d || j < 1 || j > d)
        throw std::out_of_range("transposition_map: index out of [1,d]");
    auto phi = [&](int a) { return a == i ? j : a == j ? i : a; };
    std::vector<int> perm(gd_order(d));
    perm[0] = 0;
    for (int a = 1; a <= d; ++a) perm[a] = phi(a);
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b)
            if (a != b)
                perm[gd_index(d, GdVertex::clique(a, b))] =
                    gd_index(d, GdVertex::clique(phi(a), phi(b)));
    return perm;
}

}  // namespace radmoore
