#include "sombor/index.hpp"

#include <cmath>
#include <string>

#include "sombor/error.hpp"

namespace sombor {

Alpha::Alpha(double value) : value_(value) {
  if (!std::isfinite(value)) throw Error(Errc::InvalidAlpha, "alpha must be finite");
}

const Alpha& Alpha::require_open_unit() const {
  if (!(value_ > 0.0 && value_ < 1.0)) {
    throw Error(Errc::InvalidAlpha, "alpha = " + std::to_string(value_) + " outside (0, 1)");
  }
  return *this;
}

double edge_contribution(std::size_t du, std::size_t dv, Alpha alpha) {
  if (du == 0 || dv == 0) throw Error(Errc::InvalidDegree, "edge endpoint degrees must be positive");
  const double a = static_cast<double>(du);
  const double b = static_cast<double>(dv);
  return std::pow(a * a + b * b, alpha.value());
}

IndexValue general_sombor(const Graph& g, Alpha alpha) {
  return degree_edge_sum(g, [alpha](std::size_t du, std::size_t dv) { return edge_contribution(du, dv, alpha); });
}

IndexValue sombor(const Graph& g) { return general_sombor(g, Alpha(0.5)); }

IndexValue forgotten(const Graph& g) { return general_sombor(g, Alpha(1.0)); }

}  // namespace sombor
