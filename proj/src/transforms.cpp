#include "sombor/transforms.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "sombor/error.hpp"

namespace sombor {

namespace {

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

std::string edge_text(Edge e) { return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")"; }

bool share_neighbor(const Graph& g, Vertex u, Vertex v) {
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  std::vector<Vertex> common;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
  return !common.empty();
}

}  // namespace

bool relocation_applicable(const Graph& g, Vertex u, Vertex v) {
  return g.has_edge(u, v) && g.degree(u) >= 2 && g.degree(v) >= 2 && !share_neighbor(g, u, v);
}

Graph relocate(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) throw Error(Errc::NotAnEdge, edge_text({u, v}) + " is not an edge");
  if (g.degree(u) < 2 || g.degree(v) < 2) {
    throw Error(Errc::DegreeTooLow, "both endpoints of " + edge_text({u, v}) + " need degree >= 2");
  }
  if (share_neighbor(g, u, v)) {
    throw Error(Errc::CommonNeighbor, edge_text({u, v}) + " lies on a triangle; relocation would merge edges");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [a, b] : g.edges()) {
    if (a == v && b != u) a = u;
    if (b == v && a != u) b = u;
    edges.emplace_back(a, b);
  }
  return Graph::from_edge_list(g.order(), edges);
}

Graph apply_swap(const Graph& g, const EdgeSwap& swap) {
  std::set<Edge> edges;
  for (const auto& e : g.edges()) edges.insert(e);
  for (const auto& e : swap.removals) {
    if (e.first >= g.order() || e.second >= g.order()) throw Error(Errc::OutOfRange, edge_text(e) + " out of range");
    if (edges.erase(normalized(e)) == 0) throw Error(Errc::RemovalMissing, edge_text(e) + " is not an edge");
  }
  for (const auto& e : swap.additions) {
    if (e.first == e.second) throw Error(Errc::SelfLoop, "cannot add loop " + edge_text(e));
    if (e.first >= g.order() || e.second >= g.order()) throw Error(Errc::OutOfRange, edge_text(e) + " out of range");
    if (g.has_edge(e.first, e.second)) throw Error(Errc::AdditionExists, edge_text(e) + " is already an edge");
    if (!edges.insert(normalized(e)).second) throw Error(Errc::AdditionExists, edge_text(e) + " added twice");
  }
  return Graph::from_edge_list(g.order(), std::vector<Edge>(edges.begin(), edges.end()));
}

Edge parse_vertex_pair(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw Error(Errc::ParseError, "expected \"u,v\", got '" + std::string(text) + "'");
  auto parse = [&](std::string_view token) {
    Vertex value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(Errc::ParseError, "bad vertex '" + std::string(token) + "'");
    }
    return value;
  };
  return {parse(text.substr(0, comma)), parse(text.substr(comma + 1))};
}

EdgeSwap parse_swap(std::string_view text) {
  EdgeSwap swap;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != '+' && token[0] != '-')) {
      throw Error(Errc::ParseError, "swap tokens look like +u,v or -u,v; got '" + token + "'");
    }
    Edge e = parse_vertex_pair(std::string_view(token).substr(1));
    (token[0] == '+' ? swap.additions : swap.removals).push_back(e);
  }
  return swap;
}

}  // namespace sombor
