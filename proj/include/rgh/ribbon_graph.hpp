#pragma once

#include <vector>

#include "rgh/signature.hpp"

namespace rgh {

/**
 * Connected two-colored ribbon graph with labeled tails and interior marks.
 *
 * Half-edges are 0..n-1.  `next` is the rotation whose cycles are the
 * vertices, each cycle listing the germs in counterclockwise order.  `mate`
 * is the edge involution; its fixed points are exactly the tails (legs that
 * end on the boundary rather than at another vertex).  tails[j] is the
 * half-edge carrying boundary label j+1.  marks[j] is the vertex carrying
 * interior label j+1; vertices are indexed by listing the `next` cycles in
 * increasing order of their minimal half-edge.
 *
 * Unmarked vertices must have valence >= 3, marked ones valence >= 1.
 */
struct RibbonGraph {
    std::vector<int> next;
    std::vector<int> mate;
    std::vector<int> tails;
    std::vector<int> marks;

    int half_edges() const { return static_cast<int>(next.size()); }
    int internal_edges() const {
        return (half_edges() - static_cast<int>(tails.size())) / 2;
    }
};

enum class Violation {
    non_permutation,
    non_involution,
    tail_mismatch,
    mark_mismatch,
    valence_v0,
    valence_v1,
    disconnected,
    bad_signature,
};

const char* violation_name(Violation v);

// Complete list of violated invariants; empty means the graph is valid.
// Checks on derived data (valences, connectivity, signature) are skipped when
// the layers they depend on are already broken.
std::vector<Violation> validate(const RibbonGraph& g);
bool is_valid(const RibbonGraph& g);

// Cycles of `next`, each starting at its minimal half-edge, ordered by that
// minimum.  Requires `next` to be a permutation.
std::vector<std::vector<int>> vertex_cycles(const RibbonGraph& g);

// half-edge -> index of its vertex in vertex_cycles order.
std::vector<int> vertex_index_of(const RibbonGraph& g);

// Cycles of x -> next[mate[x]], one per boundary circle of the thickened
// surface, normalized like vertex_cycles.
std::vector<std::vector<int>> boundary_cycles(const RibbonGraph& g);

// Surface type of a valid graph, from Euler characteristic and boundary count.
Signature signature_of(const RibbonGraph& g);

// Dimension of the orbi-cell the graph indexes: sum over unmarked vertices of
// (valence - 3) plus sum over marked vertices of (valence - 1).
int cell_dimension(const RibbonGraph& g);

// Catalog labeling convention: along every boundary cycle the tail labels
// occur in increasing cyclic order.
bool tails_in_boundary_order(const RibbonGraph& g);

} // namespace rgh
