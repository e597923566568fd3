#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rgh/enumerate.hpp"
#include "rgh/splitting.hpp"

namespace rgh {

/**
 * Boundary map from dimension-d chains to dimension-(d-1) chains over the
 * orientable classes of a basis.  Rows and columns are indexed by the
 * orientable classes of the two strata in canonical code order; entries are
 * signed counts of splittings landing on each target class.
 */
struct BoundaryMatrix {
    int d = 0;
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, std::int64_t>> col_entries; // per column: row -> value
};

// Orientable classes of stratum d, as indices into basis.strata[d].
std::vector<int> generator_indices(const CellBasis& basis, int d);

BoundaryMatrix boundary_matrix(const CellBasis& basis, int d, int threads = 1);

// All boundary maps d = 1..max_dim of the basis.
std::vector<BoundaryMatrix> boundary_matrices(const CellBasis& basis, int threads = 1);

// Entrywise product check: returns true when lower * upper vanishes.
// lower maps d-1 <- d, upper maps d <- d+1.
bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

// Sign of one splitting of a source class representative: the split graph's
// declared slot order (source order with the split vertex's block replaced by
// the two fragments' blocks) carried onto the target representative's
// reference slot order.  Requires the target class to be orientable for the
// value to be independent of the choice of isomorphism.
int splitting_sign(const RibbonGraph& source, const Splitting& sp,
                   const CanonicalForm& target);

// Coordinate text export: header "%dims d rows cols", then one
// "row col value" line per entry, row-major.
std::string matrix_text(const BoundaryMatrix& m);

} // namespace rgh
