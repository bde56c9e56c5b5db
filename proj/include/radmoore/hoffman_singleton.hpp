#pragma once

#include "graph.hpp"

namespace radmoore {

// Hoffman-Singleton graph in the pentagon/pentagram model: pentagons P_0..P_4
// with i ~ i+-1, pentagrams Q_0..Q_4 with j ~ j+-2, and vertex i of P_h joined
// to vertex h*k + i (mod 5) of Q_k.  The unique (7,2) Moore graph: 7-regular,
// order 50, girth 5, every vertex status 91.
inline Graph hoffman_singleton() {
    GraphBuilder b(50);
    auto P = [](int h, int i) { return 5 * h + i; };
    auto Q = [](int k, int j) { return 25 + 5 * k + j; };
    for (int h = 0; h < 5; ++h) {
        for (int i = 0; i < 5; ++i) {
            b.add_edge(P(h, i), P(h, (i + 1) % 5));
            b.add_edge(Q(h, i), Q(h, (i + 2) % 5));
            for (int k = 0; k < 5; ++k) b.add_edge(P(h, i), Q(k, (h * k + i) % 5));
        }
    }
    return b.build();
}

}  // namespace radmoore
