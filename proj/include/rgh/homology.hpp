#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "rgh/boundary.hpp"
#include "rgh/enumerate.hpp"

namespace rgh {

enum class HomologyMode { rational, integer };

const char* mode_name(HomologyMode mode);

// Integral homology is available exactly when boundary marked points are
// present (r > 0); without them orientation-reversing symmetries force
// rational coefficients.
HomologyMode default_mode(const Signature& sig);

struct HomologyResult {
    Signature sig;
    HomologyMode mode = HomologyMode::integer;
    std::map<int, long> cells;  // catalog classes per dimension (nonempty strata)
    std::map<int, long> betti;  // every dimension 0..top, zeros included
    std::map<int, std::vector<mpz_class>> torsion; // integer mode, nonempty lists
    long long euler = 0;        // alternating sum of the Betti numbers
    mpq_class euler_orbifold;   // alternating sum of 1/|Aut| over all classes
};

HomologyResult homology(const CellBasis& basis, const std::vector<BoundaryMatrix>& maps,
                        HomologyMode mode, int threads = 1);
HomologyResult homology(const CellBasis& basis, HomologyMode mode, int threads = 1);

// Alternating sums straight off the catalog, ignoring orientability: plain
// counts each class once, the orbifold variant weights by 1/|Aut|.
std::pair<long long, mpq_class> euler_characteristics(const CellBasis& basis);

} // namespace rgh
