#pragma once

#include <string>

#include "rgh/enumerate.hpp"
#include "rgh/homology.hpp"

namespace rgh {

inline constexpr const char* kToolVersion = "1.0.0";

/**
 * Catalog interchange: one JSON object per line.  The header line carries
 * format name, tool version, signature and the partial flag; each following
 * line is one class, in dimension-ascending then code-ascending order:
 *   {"dim": d, "code": [...], "aut": n, "orientable": b, "graph": {...}}
 * Writing is canonical: equal bases serialize to equal bytes.
 */
std::string catalog_to_jsonl(const CellBasis& basis);

// Parses and fully re-checks a catalog: every graph is validated and
// re-canonicalized, and the stored codes, dimensions and automorphism counts
// must match.  Throws std::invalid_argument on any disagreement.
CellBasis catalog_from_jsonl(const std::string& text);

std::string homology_report_json(const HomologyResult& result, bool pretty = false);

} // namespace rgh
