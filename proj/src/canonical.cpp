#include "sombor/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>

#include "sombor/error.hpp"
#include "sombor/graph_io.hpp"

namespace sombor {

namespace {

using Mask = std::uint64_t;
using Partition = std::vector<Mask>;  // ordered cells

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

// Individualization-refinement search over ordered partitions. Leaves are
// compared by their relabeled adjacency rows; the lexicographically largest
// leaf defines the canonical order.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) adj_[v] |= bit(w);
    }
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    // Initial partition by degree, cells ordered by increasing degree.
    std::map<int, Mask> by_degree;
    for (Vertex v = 0; v < n_; ++v) by_degree[std::popcount(adj_[v])] |= bit(v);
    Partition cells;
    for (const auto& [deg, mask] : by_degree) cells.push_back(mask);
    std::deque<Mask> queue(cells.begin(), cells.end());
    refine(cells, queue);
    search(cells);
    return best_label_;
  }

 private:
  void refine(Partition& cells, std::deque<Mask>& queue) const {
    std::vector<std::pair<int, Mask>> groups;
    while (!queue.empty()) {
      const Mask splitter = queue.front();
      queue.pop_front();
      for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        const Mask cell = cells[idx];
        if (std::has_single_bit(cell)) continue;
        groups.clear();
        for_each_bit(cell, [&](Vertex v) {
          int count = std::popcount(adj_[v] & splitter);
          auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& gr) { return gr.first == count; });
          if (it == groups.end()) {
            groups.emplace_back(count, bit(v));
          } else {
            it->second |= bit(v);
          }
        });
        if (groups.size() == 1) continue;
        std::sort(groups.begin(), groups.end());
        cells[idx] = groups[0].second;
        std::vector<Mask> rest;
        for (std::size_t k = 1; k < groups.size(); ++k) rest.push_back(groups[k].second);
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(idx) + 1, rest.begin(), rest.end());
        for (const auto& gr : groups) queue.push_back(gr.second);
        idx += rest.size();
      }
    }
  }

  bool twins(Vertex v, Vertex w) const { return (adj_[v] & ~bit(w)) == (adj_[w] & ~bit(v)); }

  void search(const Partition& cells) {
    std::size_t target = cells.size();
    int target_size = 0;
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
      int size = std::popcount(cells[idx]);
      if (size > 1 && (target == cells.size() || size < target_size)) {
        target = idx;
        target_size = size;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }

    std::vector<Vertex> tried;
    for_each_bit(cells[target], [&](Vertex v) {
      // Swapping twins is an automorphism fixing the current partition, so
      // their subtrees carry identical leaves.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(v, t); })) return;
      tried.push_back(v);
      Partition next = cells;
      next[target] = bit(v);
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells[target] & ~bit(v));
      std::deque<Mask> queue{bit(v)};
      refine(next, queue);
      search(next);
    });
  }

  void leaf(const Partition& cells) {
    std::vector<Vertex> label(n_);
    for (std::size_t pos = 0; pos < cells.size(); ++pos) {
      label[static_cast<Vertex>(std::countr_zero(cells[pos]))] = static_cast<Vertex>(pos);
    }
    std::vector<Mask> rows(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      Mask row = 0;
      for_each_bit(adj_[v], [&](Vertex w) { row |= bit(label[w]); });
      rows[label[v]] = row;
    }
    if (best_label_.empty() || rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_label_ = std::move(label);
    }
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<Mask> best_rows_;
  std::vector<Vertex> best_label_;
};

void check_limit(const Graph& g, std::size_t limit) {
  const std::size_t cap = std::min(limit, kMaxCanonicalOrder);
  if (g.order() > cap) {
    throw Error(Errc::TooLarge, "canonical labeling limited to " + std::to_string(cap) + " vertices, got " +
                                    std::to_string(g.order()));
  }
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g, std::size_t limit) {
  check_limit(g, limit);
  return Canonizer(g).run();
}

Graph canonical_form(const Graph& g, std::size_t limit) { return g.relabeled(canonical_labeling(g, limit)); }

CanonicalCode canonical_code(const Graph& g, std::size_t limit) {
  return CanonicalCode{g.order(), to_graph6(canonical_form(g, limit))};
}

Graph to_graph(const CanonicalCode& code) { return from_graph6(code.bytes); }

bool are_isomorphic(const Graph& g, const Graph& h, std::size_t limit) {
  check_limit(g, limit);
  check_limit(h, limit);
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_code(g, limit) == canonical_code(h, limit);
}

}  // namespace sombor
