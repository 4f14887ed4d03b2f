#include "sombor/enumerate.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>

#include "sombor/error.hpp"

namespace sombor {

namespace {

using Levels = std::vector<int>;

// Level sequences and successor rules after Wright, Richmond, Odlyzko and
// McKay: each free tree is visited once through a canonical rooted form.

std::optional<Levels> next_rooted_tree(const Levels& pred, std::optional<std::size_t> start = std::nullopt) {
  std::size_t p = 0;
  if (start) {
    p = *start;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Levels result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Splits off the leftmost principal subtree of the root.
std::pair<Levels, Levels> split_tree(const Levels& layout) {
  bool one_found = false;
  std::size_t m = layout.size();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Levels left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Levels rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

std::optional<Levels> next_tree(const Levels& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size() || (left.size() == rest.size() && left > rest)) valid = false;
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  auto next = next_rooted_tree(candidate, p);
  if (next && candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(*next);
    const int new_left_height = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t k = 0; k < len; ++k) (*next)[next->size() - len + k] = static_cast<int>(k) + 1;
  }
  return next;
}

Graph levels_to_graph(const Levels& layout) {
  std::vector<Edge> edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
    }
    stack.push_back(i);
  }
  return Graph::from_edge_list(layout.size(), edges);
}

using CodeSet = std::unordered_set<CanonicalCode, CanonicalCodeHash>;

std::set<CanonicalCode> collect_codes(const EnumFilter& filter, const EnumOptions& options) {
  filter.validate();
  if (filter.n > options.max_n) {
    throw Error(Errc::TooLarge, "unicyclic enumeration capped at n = " + std::to_string(options.max_n) +
                                    ", got " + std::to_string(filter.n));
  }
  const std::vector<Graph> trees = enumerate_free_trees(filter.n);
  const unsigned jobs = std::min<unsigned>(resolve_jobs(options.jobs), static_cast<unsigned>(trees.size()));
  const std::size_t limit = std::max(filter.n, kDefaultCanonicalLimit);

  std::vector<CodeSet> partial(jobs);
  auto work = [&](unsigned worker) {
    CodeSet& local = partial[worker];
    for (std::size_t t = worker; t < trees.size(); t += jobs) {
      const Graph& tree = trees[t];
      const auto tree_edges = tree.edges();
      for (Vertex u = 0; u < filter.n; ++u) {
        const auto dist = bfs_distances(tree, u);
        for (Vertex v = u + 1; v < filter.n; ++v) {
          if (dist[v] < 2) continue;
          if (filter.girth && dist[v] + 1 != *filter.girth) continue;
          std::vector<Edge> edges = tree_edges;
          edges.emplace_back(u, v);
          Graph g = Graph::from_edge_list(filter.n, edges);
          if (filter.diameter && diameter(g) != *filter.diameter) continue;
          local.insert(canonical_code(g, limit));
        }
      }
    }
  };

  if (jobs <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  std::set<CanonicalCode> merged;
  for (auto& local : partial) merged.insert(local.begin(), local.end());
  return merged;
}

}  // namespace

unsigned resolve_jobs(unsigned jobs) {
  if (jobs > 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_free_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n == 0) throw Error(Errc::InvalidParameters, "trees need at least one vertex");
  if (n > kMaxTreeOrder) {
    throw Error(Errc::TooLarge, "free-tree enumeration capped at n = " + std::to_string(kMaxTreeOrder));
  }
  if (n == 1) {
    visit(Graph::from_edge_list(1, {}));
    return;
  }
  Levels layout;
  for (std::size_t i = 0; i <= n / 2; ++i) layout.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout.push_back(static_cast<int>(i));

  std::optional<Levels> current = layout;
  while (current) {
    current = next_tree(*current);
    if (!current) break;
    visit(levels_to_graph(*current));
    current = next_rooted_tree(*current);
  }
}

std::vector<Graph> enumerate_free_trees(std::size_t n) {
  std::vector<Graph> out;
  for_each_free_tree(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void EnumFilter::validate() const {
  if (n < 3) throw Error(Errc::InvalidParameters, "unicyclic graphs need n >= 3");
  if (diameter && (*diameter < 1 || *diameter > n - 2)) {
    throw Error(Errc::InvalidParameters, "diameter filter must lie in 1..n-2");
  }
  if (girth && (*girth < 3 || *girth > n)) throw Error(Errc::InvalidParameters, "girth filter must lie in 3..n");
}

bool EnumFilter::accepts(const Graph& g) const {
  if (g.order() != n || !is_unicyclic(g)) return false;
  if (diameter && sombor::diameter(g) != *diameter) return false;
  if (girth && sombor::girth(g) != *girth) return false;
  return true;
}

EnumResult enumerate_unicyclic(const EnumFilter& filter, const EnumOptions& options) {
  const auto codes = collect_codes(filter, options);
  EnumResult result;
  result.codes.assign(codes.begin(), codes.end());
  result.graphs.reserve(result.codes.size());
  for (const auto& code : result.codes) result.graphs.push_back(to_graph(code));
  return result;
}

std::size_t count_unicyclic(std::size_t n, std::optional<std::size_t> diameter, const EnumOptions& options) {
  return count_unicyclic(EnumFilter{n, diameter, std::nullopt}, options);
}

std::size_t count_unicyclic(const EnumFilter& filter, const EnumOptions& options) {
  return collect_codes(filter, options).size();
}

}  // namespace sombor
