#include "sombor/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "sombor/error.hpp"

namespace sombor {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw Error(Errc::OutOfRange,
                "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
  }
}

}  // namespace

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(Errc::OutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint >= " + std::to_string(n));
    }
    if (u == v) {
      throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = g.adjacency_[v];
    std::sort(list.begin(), list.end());
    if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
      throw Error(Errc::DuplicateEdge,
                  "edge (" + std::to_string(v) + "," + std::to_string(*dup) + ") listed twice");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(*this, v);
  return adjacency_[v].size();
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) {
    throw Error(Errc::InvalidParameters, "permutation size does not match graph order");
  }
  std::vector<bool> seen(order(), false);
  for (Vertex p : perm) {
    if (p >= order() || seen[p]) throw Error(Errc::InvalidParameters, "not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edge_count_);
  for (const auto& [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return from_edge_list(order(), mapped);
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreachable; });
}

std::size_t diameter(const Graph& g) {
  if (g.order() == 0) throw Error(Errc::InvalidParameters, "diameter of the empty graph");
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == kUnreachable) throw Error(Errc::Disconnected, "diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

std::size_t girth(const Graph& g) {
  // A non-tree edge (u, w) met during BFS from s closes a closed walk of
  // length dist[u] + dist[w] + 1 containing a cycle; the minimum over all
  // roots is attained on a shortest cycle.
  std::size_t best = kUnreachable;
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[s] = 0;
    parent[s] = s;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnreachable) throw Error(Errc::Acyclic, "graph has no cycle");
  return best;
}

bool is_unicyclic(const Graph& g) {
  return g.order() > 0 && g.size() == g.order() && is_connected(g);
}

std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> cycle_vertices(const Graph& g) {
  if (!is_unicyclic(g)) throw Error(Errc::NotUnicyclic, "cycle extraction needs a unicyclic graph");

  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    removed[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) stack.push_back(w);
    }
  }

  // What survives is 2-regular: walk it.
  Vertex start = 0;
  while (removed[start]) ++start;
  std::vector<Vertex> core_nbrs;
  for (Vertex w : g.neighbors(start)) {
    if (!removed[w]) core_nbrs.push_back(w);
  }
  std::vector<Vertex> cycle{start};
  Vertex prev = start;
  Vertex cur = std::min(core_nbrs[0], core_nbrs[1]);
  while (cur != start) {
    cycle.push_back(cur);
    for (Vertex w : g.neighbors(cur)) {
      if (!removed[w] && w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    }
  }
  return cycle;
}

}  // namespace sombor
