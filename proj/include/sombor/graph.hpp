#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace sombor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted, so two graphs compare equal exactly when
/// they have the same labeled edge set. Every "modification" elsewhere in the
/// library builds a new Graph.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Throws Error{OutOfRange | DuplicateEdge | SelfLoop}.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::size_t degree(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Returns the graph with vertex v renamed to perm[v]. perm must be a
  /// permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& g);

/// Single-source shortest path lengths; kUnreachable where no path exists.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Largest eccentricity. Throws Error{Disconnected}.
std::size_t diameter(const Graph& g);

/// Shortest cycle length. Throws Error{Acyclic} for forests.
std::size_t girth(const Graph& g);

/// Connected with |E| = |V|.
bool is_unicyclic(const Graph& g);

std::vector<Vertex> pendant_vertices(const Graph& g);

/// The unique cycle in cyclic order, starting from its smallest vertex and
/// continuing towards the smaller of that vertex's two cycle neighbours.
/// Throws Error{NotUnicyclic}.
std::vector<Vertex> cycle_vertices(const Graph& g);

}  // namespace sombor
