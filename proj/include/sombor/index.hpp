#pragma once

#include <cstddef>

#include "sombor/graph.hpp"

namespace sombor {

/// Real exponent of the general Sombor index. Any finite value is accepted
/// here; operations that rely on 0 < alpha < 1 call require_open_unit().
class Alpha {
 public:
  explicit Alpha(double value);

  double value() const noexcept { return value_; }

  /// Throws Error{InvalidAlpha} unless 0 < value < 1.
  const Alpha& require_open_unit() const;

  friend bool operator==(const Alpha&, const Alpha&) = default;

 private:
  double value_;
};

using IndexValue = double;

/// (du^2 + dv^2)^alpha. Throws Error{InvalidDegree} for a zero degree.
double edge_contribution(std::size_t du, std::size_t dv, Alpha alpha);

/// Sum over edges of an edge function of the endpoint degrees, taken in
/// lexicographic edge order so the floating-point result is reproducible.
template <typename EdgeFn>
IndexValue degree_edge_sum(const Graph& g, EdgeFn&& fn) {
  IndexValue total = 0.0;
  for (const auto& [u, v] : g.edges()) total += fn(g.degree(u), g.degree(v));
  return total;
}

/// SO_alpha(G) = sum over uv in E(G) of (d(u)^2 + d(v)^2)^alpha.
IndexValue general_sombor(const Graph& g, Alpha alpha);

/// Sombor index, alpha = 1/2.
IndexValue sombor(const Graph& g);

/// Forgotten index F(G), alpha = 1.
IndexValue forgotten(const Graph& g);

}  // namespace sombor
