#pragma once

#include <numeric>
#include <vector>

#include "rgh/ribbon_graph.hpp"

// Hand-built graphs shared across the test suites.
namespace fx {

// One vertex, r tails labeled 1..r in rotation order.
inline rgh::RibbonGraph corolla(int r) {
    rgh::RibbonGraph g;
    g.next.resize(r);
    g.mate.resize(r);
    g.tails.resize(r);
    for (int i = 0; i < r; ++i) {
        g.next[i] = (i + 1) % r;
        g.mate[i] = i;
        g.tails[i] = i;
    }
    return g;
}

// Two trivalent vertices joined by three edges, glued so the thickened
// surface is a torus with one boundary circle.
inline rgh::RibbonGraph theta_torus() {
    return {{1, 2, 0, 4, 5, 3}, {3, 4, 5, 0, 1, 2}, {}, {}};
}

// Same underlying graph, glued flat: a sphere with three boundary circles.
inline rgh::RibbonGraph theta_planar() {
    return {{1, 2, 0, 4, 5, 3}, {5, 4, 3, 2, 1, 0}, {}, {}};
}

// Two loop vertices joined by a bridge; also a three-holed sphere.
inline rgh::RibbonGraph dumbbell() {
    return {{1, 2, 0, 4, 5, 3}, {1, 0, 3, 2, 5, 4}, {}, {}};
}

// One 4-valent vertex with two interleaved loops: torus, one boundary circle.
inline rgh::RibbonGraph four_valent() {
    return {{1, 2, 3, 0}, {2, 3, 0, 1}, {}, {}};
}

// Trivalent vertex with a loop and one tail: annulus with one labeled point.
inline rgh::RibbonGraph loop_tail() {
    return {{1, 2, 0}, {1, 0, 2}, {2}, {}};
}

// One marked 2-valent vertex with both germs tails: disc, two labeled
// points, one interior mark.
inline rgh::RibbonGraph marked_bivalent() {
    return {{1, 0}, {0, 1}, {0, 1}, {0}};
}

// Image of g under the half-edge bijection rho, with marks carried onto the
// image vertices.
inline rgh::RibbonGraph relabel_graph(const rgh::RibbonGraph& g,
                                      const std::vector<int>& rho) {
    const int n = g.half_edges();
    rgh::RibbonGraph out;
    out.next.resize(n);
    out.mate.resize(n);
    for (int x = 0; x < n; ++x) {
        out.next[rho[x]] = rho[g.next[x]];
        out.mate[rho[x]] = rho[g.mate[x]];
    }
    out.tails.reserve(g.tails.size());
    for (int t : g.tails) out.tails.push_back(rho[t]);
    const auto verts = rgh::vertex_cycles(g);
    const auto new_index = rgh::vertex_index_of(out);
    for (int v : g.marks) out.marks.push_back(new_index[rho[verts[v][0]]]);
    return out;
}

} // namespace fx
