#pragma once

#include <vector>

#include "rgh/ribbon_graph.hpp"

namespace rgh {

/**
 * One way of splitting a vertex into two along a chord of its rotation.
 *
 * With c_0..c_{n-1} the source vertex's germs in reference order (least germ
 * first), the germs c_offset..c_{offset+arc_len-1} (cyclically) move to the
 * first fragment and the rest to the second, and a new internal edge joins
 * the fragments.  The first fragment keeps the vertex's interior mark if it
 * has one; the second is always unmarked, so it needs at least two germs of
 * its own.  The new edge's half-edges get ids H and H+1 (H = source half-edge
 * count): H sits last in the first fragment's rotation, H+1 first in the
 * second's.
 *
 * Unmarked vertices split with 2 <= arc_len <= n-2; the two fragments are
 * unordered, so of each complementary pair of chords only the
 * lexicographically least (arc_len, offset) is kept.  Marked vertices split
 * with 0 <= arc_len <= n-2 and every offset, the mark staying with the first
 * fragment.
 */
struct Splitting {
    int vertex = 0;
    int offset = 0;
    int arc_len = 0;
    RibbonGraph result;
};

// All splittings of all vertices, in (vertex, arc_len, offset) order.  Each
// result is valid, has the same signature and boundary label order as g, and
// indexes a cell of one dimension lower.
std::vector<Splitting> splittings(const RibbonGraph& g);

} // namespace rgh
