#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgh/canonical.hpp"
#include "rgh/ribbon_graph.hpp"

namespace rgh {

/**
 * One isomorphism class of the cell catalog: its canonical representative,
 * the dimension of the cell it indexes, the order of its automorphism group,
 * and whether all automorphisms preserve orientation.
 */
struct CellClass {
    CanonicalCode code;
    RibbonGraph rep;
    int dim = 0;
    int aut_order = 1;
    bool orientable = true;
};

struct CellBasis {
    Signature sig;
    // strata[d] lists the dimension-d classes in canonical code order
    std::vector<std::vector<CellClass>> strata;
    bool partial = false;

    int max_dim() const { return static_cast<int>(strata.size()) - 1; }
    long total_classes() const;
    std::map<int, long> counts_by_dimension() const;
    const CellClass* find(int dim, const CanonicalCode& code) const;
    const CellClass* find(const CanonicalCode& code) const;
};

struct EnumerationLimits {
    long max_cells = 0;      // 0 = unlimited
    double max_seconds = 0;  // 0 = unlimited
};

class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(const std::string& what, CellBasis partial_basis)
        : std::runtime_error(what), partial_(std::move(partial_basis)) {
        partial_.partial = true;
    }
    const CellBasis& partial() const { return partial_; }

  private:
    CellBasis partial_;
};

/**
 * Complete cell catalog for a surface type.  Excluded types yield an empty
 * basis.  Output is deterministic and independent of the thread count; going
 * over budget raises BudgetExceeded carrying whatever was assembled.
 */
CellBasis enumerate_cells(const Signature& sig, const EnumerationLimits& limits = {},
                          int threads = 1);

} // namespace rgh
