#pragma once

#include <string>

#include <json.hpp>

#include "dcdkit/graph.hpp"
#include "dcdkit/incidence.hpp"

namespace dcdkit {

/// "p graph <n> <m>" header, then one "u v" line per edge. An optional
/// "c <color> ..." line carries the vertex coloring; '#' starts a comment.
std::string to_edgelist(const Graph& g);
/// Throws ParseError.
Graph graph_from_edgelist(const std::string& text);

/// {"vertices": n, "edges": [[u, v], ...], "colors": [...]}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// {"points": [...], "blocks": [...], "incidence": [[pi, bi], ...]} with
/// points and blocks each sorted by label and indices referring to the
/// sorted lists, so equal labelled structures serialize identically.
nlohmann::json to_json(const IncidenceStructure& s);
IncidenceStructure incidence_from_json(const nlohmann::json& j);

}  // namespace dcdkit
