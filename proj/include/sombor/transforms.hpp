#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

struct EdgeSwap {
  std::vector<Edge> additions;
  std::vector<Edge> removals;
};

/// Whether relocate(g, u, v) is defined: uv is an edge, both endpoints have
/// degree >= 2 and they share no neighbour.
bool relocation_applicable(const Graph& g, Vertex u, Vertex v);

/// Moves every edge vw (w != u) to uw, keeping uv, so v becomes a pendant
/// of u. Labels are unchanged.
/// Throws Error{NotAnEdge | DegreeTooLow | CommonNeighbor | OutOfRange}.
Graph relocate(const Graph& g, Vertex u, Vertex v);

/// Deletes `removals`, then inserts `additions`, both checked against g.
/// Throws Error{RemovalMissing | AdditionExists | SelfLoop | OutOfRange}.
Graph apply_swap(const Graph& g, const EdgeSwap& swap);

/// Parses whitespace-separated "+a,b" / "-c,d" tokens.
EdgeSwap parse_swap(std::string_view text);

/// Parses "u,v".
Edge parse_vertex_pair(std::string_view text);

}  // namespace sombor
