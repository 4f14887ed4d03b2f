#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

// graph6: size header N(n) followed by the upper triangle of the adjacency
// matrix, column by column (x(0,1) x(0,2) x(1,2) x(0,3) ...), packed six bits
// per byte, big-endian within the group, each byte offset by 63.
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" prefix and a trailing newline.
/// Throws Error{ParseError}.
Graph from_graph6(std::string_view text);

// Edge-list text: "n m" on the first line, then m lines "u v" (0-based).
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::istream& in);

/// Reads every graph in a file. A first non-blank line of the form "n m"
/// selects edge-list format (one graph per file); otherwise each non-blank
/// line is parsed as graph6.
std::vector<Graph> read_graphs(const std::string& path);

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace sombor
