#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "mbasis/graph.hpp"

namespace mbasis {

/// Edge-list text: a "n m" header, then m lines "u v" with 0-based ids.
/// Anything after '#' on a line is ignored. Throws ParseError or InvalidGraph.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// {"n": int, "edges": [[u,v], ...], "labels": {"0": "v1", ...}}.
/// "labels" is optional and may also be given as an array of n strings.
Graph parse_graph_json(std::string_view text);
std::string to_graph_json(const Graph& g);

/// Undirected DOT, vertex names as labels.
std::string to_dot(const Graph& g, std::string_view name = "G");

/// Chooses JSON when the first non-blank character is '{', else edge list.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

}  // namespace mbasis
