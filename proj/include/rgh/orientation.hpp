#pragma once

#include <vector>

#include "rgh/ribbon_graph.hpp"

namespace rgh {

/**
 * Ordered bookkeeping slots that pin down a cell's orientation.  Each vertex
 * contributes its germs in reference cyclic order (starting at the least
 * half-edge) followed by its gauge slots: three for an unmarked vertex, one
 * for a marked one, matching the dimensions quotiented out at that vertex.
 * A symmetry orients the cell positively iff the slot permutation it induces
 * is even.
 */
struct SlotLayout {
    std::vector<int> germ_slot;  // half-edge -> slot position
    std::vector<int> gauge_base; // vertex -> first gauge slot position
    std::vector<int> gauge_count;
    int total = 0;
};

SlotLayout slot_layout(const RibbonGraph& g);

// Parity of a permutation of 0..n-1: +1 even, -1 odd.
int permutation_sign(std::vector<int> p);

// Sign of the slot permutation induced by the automorphism phi.
int automorphism_sign(const RibbonGraph& g, const std::vector<int>& phi);

// True when every automorphism acts with sign +1.  Cells failing this carry
// no homology generator.
bool is_orientable(const RibbonGraph& g);

} // namespace rgh
