#pragma once

#include <string>

#include "json.hpp"
#include "rgh/ribbon_graph.hpp"

namespace rgh {

/**
 * Graph interchange format:
 *   {"sigma": [[...], ...], "alpha": [[a,b], ...], "tails": [...], "marks": [...]}
 * sigma lists the vertex cycles, each starting at its least half-edge and
 * ordered by that least element; alpha lists the internal edges as ascending
 * pairs sorted by first element; fixed points of the pairing are implied by
 * their absence.  Writing is canonical, so equal graphs serialize to equal
 * bytes.
 */
nlohmann::ordered_json graph_to_json_obj(const RibbonGraph& g);
std::string graph_to_json(const RibbonGraph& g, bool pretty = false);

// Throws std::invalid_argument on structural problems (bad JSON, overlapping
// cycles, non-indices); semantic checks stay with validate().
RibbonGraph graph_from_json_obj(const nlohmann::json& j);
RibbonGraph graph_from_json(const std::string& text);

std::string graph_to_dot(const RibbonGraph& g);

} // namespace rgh
