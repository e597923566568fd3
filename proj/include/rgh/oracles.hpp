#pragma once

#include <map>
#include <vector>

#include "rgh/enumerate.hpp"
#include "rgh/ribbon_graph.hpp"

namespace rgh {

/**
 * Reference implementations kept deliberately independent of the production
 * enumeration and canonicalization paths.  They share the RibbonGraph type
 * and its basic queries, nothing else; tests use them to cross-check counts,
 * automorphism orders and whole catalogs.
 */

// Planar rooted tree; a node with no children is a leaf.
struct TreeShape {
    std::vector<TreeShape> children;
    bool leaf() const { return children.empty(); }
};

// All ordered trees with the given number of leaves in which every internal
// node has at least two children.
std::vector<TreeShape> planar_trees(int leaves);

int internal_nodes(const TreeShape& t);

// Number of planar trees with r >= 3 cyclically ordered boundary leaves and
// all internal vertices of valence >= 3, keyed by internal edge count.
// Counted by rooting at leaf r and generating shapes explicitly.
std::map<int, long> tree_counts(int r);

// Every structure automorphism preserving tail labels and interior marks,
// found by trying each image of half-edge 0 and propagating through the two
// structure maps.
std::vector<std::vector<int>> brute_automorphisms(const RibbonGraph& g);

struct NaiveLimits {
    long max_steps = 400'000'000;
};

// Reference catalog: materialize candidate rotations and pairings with no
// symmetry pruning, filter by validity and label order, dedupe by canonical
// code.  Rotations are enumerated outright for up to 8 half-edges; beyond
// that one normalized rotation per valence layout stands in (every class has
// a representative on it), with the pairing space still exhausted.
CellBasis naive_enumerate(const Signature& sig, const NaiveLimits& limits = {});

} // namespace rgh
