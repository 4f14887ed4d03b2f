#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

inline constexpr std::size_t kDefaultCanonicalLimit = 16;
// Hard ceiling: adjacency rows are held in 64-bit words.
inline constexpr std::size_t kMaxCanonicalOrder = 64;

/// Isomorphism-invariant identifier of an unlabeled graph: the graph6
/// encoding of its canonical relabeling. Equal codes iff isomorphic graphs.
struct CanonicalCode {
  std::size_t n = 0;
  std::string bytes;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept { return std::hash<std::string>{}(c.bytes); }
};

/// canonical_labeling(g)[v] is the position of v in the canonical order.
/// Throws Error{TooLarge} when order exceeds `limit` (or 64).
std::vector<Vertex> canonical_labeling(const Graph& g, std::size_t limit = kDefaultCanonicalLimit);

CanonicalCode canonical_code(const Graph& g, std::size_t limit = kDefaultCanonicalLimit);

/// The canonical representative (decoded code).
Graph canonical_form(const Graph& g, std::size_t limit = kDefaultCanonicalLimit);
Graph to_graph(const CanonicalCode& code);

bool are_isomorphic(const Graph& g, const Graph& h, std::size_t limit = kDefaultCanonicalLimit);

}  // namespace sombor
