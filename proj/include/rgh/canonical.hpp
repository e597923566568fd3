#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "rgh/ribbon_graph.hpp"

namespace rgh {

/**
 * Relabeling-invariant key for a graph: the least of the codes produced by
 * breadth-first relabelings from each half-edge.  Equal codes = isomorphic
 * graphs (label- and mark-preserving isomorphism).
 */
struct CanonicalCode {
    std::vector<int> v;
    auto operator<=>(const CanonicalCode&) const = default;
};

struct CanonicalForm {
    CanonicalCode code;
    RibbonGraph graph;        // representative carrying the least code
    std::vector<int> relabel; // input half-edge -> representative half-edge
    int aut_order = 1;        // number of starts achieving the least code
};

// with_labels=false ignores the tail labeling, keying the underlying skeleton;
// interior marks always participate.  Requires a connected graph whose next
// and mate are a permutation/involution.
CanonicalForm canonicalize(const RibbonGraph& g, bool with_labels = true);

CanonicalCode canonical_code(const RibbonGraph& g);

bool is_isomorphic(const RibbonGraph& a, const RibbonGraph& b);

// Half-edge bijection carrying a onto b (structure, tails and marks), if one
// exists.
std::optional<std::vector<int>> isomorphism(const RibbonGraph& a, const RibbonGraph& b);

// All label- and mark-preserving automorphisms, as half-edge permutations.
// The identity is always included.
std::vector<std::vector<int>> automorphisms(const RibbonGraph& g);

} // namespace rgh
