#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sombor/canonical.hpp"
#include "sombor/graph.hpp"

namespace sombor {

inline constexpr std::size_t kMaxTreeOrder = 16;
inline constexpr std::size_t kDefaultUnicyclicCap = 14;

/// Calls `visit` once per isomorphism class of trees on n vertices, in the
/// order produced by the free-tree successor function on level sequences.
/// Throws Error{TooLarge} above kMaxTreeOrder, Error{InvalidParameters} for n = 0.
void for_each_free_tree(std::size_t n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_free_trees(std::size_t n);

struct EnumFilter {
  std::size_t n = 3;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> girth;

  /// Throws Error{InvalidParameters} when the filter is malformed.
  void validate() const;
  bool accepts(const Graph& g) const;
};

struct EnumOptions {
  std::size_t max_n = kDefaultUnicyclicCap;
  unsigned jobs = 0;  // 0: hardware concurrency
};

struct EnumResult {
  std::vector<CanonicalCode> codes;  // sorted
  std::vector<Graph> graphs;         // canonical representatives, same order

  std::size_t count() const noexcept { return codes.size(); }
};

/// All unlabeled connected unicyclic graphs passing `filter`, each once.
/// Built by adding one edge to every free tree on n vertices and
/// deduplicating by canonical code; the output order is the code order and
/// does not depend on `options.jobs`. Throws Error{TooLarge} above options.max_n.
EnumResult enumerate_unicyclic(const EnumFilter& filter, const EnumOptions& options = {});

/// Same class, but only the number of codes is kept.
std::size_t count_unicyclic(std::size_t n, std::optional<std::size_t> diameter = std::nullopt,
                            const EnumOptions& options = {});
std::size_t count_unicyclic(const EnumFilter& filter, const EnumOptions& options = {});

unsigned resolve_jobs(unsigned jobs);

}  // namespace sombor
