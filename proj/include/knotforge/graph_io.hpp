#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "knotforge/graph.hpp"

namespace knotforge {

enum class GraphFormat { json, dot };

// JSON: {"vertices":[..], "edges":[{"id","u","v"}], "rotations":{"<v>":["<e>a", ...]}}
// with "rotations" present only for plane graphs. DOT keeps parallel edges.
std::string export_graph(const MultiGraph& g, GraphFormat format);
std::string export_graph(const PlaneGraph& g, GraphFormat format);

// Reads the JSON schema above. Vertex ids must be 0..n-1 and edge ids 0..m-1
// (in any order). Throws std::invalid_argument on malformed input.
std::variant<MultiGraph, PlaneGraph> import_graph_json(std::string_view text);
PlaneGraph import_plane_graph_json(std::string_view text);

}  // namespace knotforge
