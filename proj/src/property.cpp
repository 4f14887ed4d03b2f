#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "sombor/error.hpp"
#include "sombor/graph_io.hpp"
#include "sombor/transforms.hpp"
#include "sombor/verify.hpp"

namespace sombor {

AlphaSampler AlphaSampler::fixed(double alpha) {
  (void)Alpha(alpha);
  return AlphaSampler(alpha, alpha);
}

AlphaSampler AlphaSampler::uniform(double lo, double hi) {
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(Errc::InvalidAlpha, "alpha sampling range is empty or not finite");
  }
  return AlphaSampler(lo, hi);
}

double AlphaSampler::draw(std::mt19937_64& rng) const {
  if (lo_ == hi_) return lo_;
  // Open interval: redraw the (measure-zero) endpoints.
  std::uniform_real_distribution<double> dist(lo_, hi_);
  double a = dist(rng);
  while (a <= lo_) a = dist(rng);
  return a;
}

std::string AlphaSampler::describe() const {
  std::ostringstream out;
  if (lo_ == hi_) {
    out << lo_;
  } else {
    out << "uniform(" << lo_ << "," << hi_ << ")";
  }
  return out.str();
}

Graph random_connected_graph(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    edges.emplace_back(perm[v], perm[parent(rng)]);
  }
  std::uniform_int_distribution<std::size_t> extra_count(0, n);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  const std::size_t extra = extra_count(rng);
  Graph g = Graph::from_edge_list(n, edges);
  for (std::size_t k = 0; k < extra; ++k) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a == b || g.has_edge(a, b)) continue;
    edges.emplace_back(a, b);
    g = Graph::from_edge_list(n, edges);
  }
  return g;
}

std::optional<RelocationInstance> sample_relocation(const Graph& g, const AlphaSampler& alpha, std::mt19937_64& rng) {
  std::vector<Edge> applicable;
  for (const auto& [a, b] : g.edges()) {
    if (relocation_applicable(g, a, b)) {
      applicable.emplace_back(a, b);
      applicable.emplace_back(b, a);
    }
  }
  if (applicable.empty()) return std::nullopt;

  std::uniform_int_distribution<std::size_t> pick(0, applicable.size() - 1);
  const auto [u, v] = applicable[pick(rng)];
  const Alpha a(alpha.draw(rng));
  RelocationInstance inst;
  inst.graph6 = to_graph6(g);
  inst.u = u;
  inst.v = v;
  inst.alpha = a.value();
  inst.before = general_sombor(g, a);
  inst.after = general_sombor(relocate(g, u, v), a);
  return inst;
}

PropertyReport verify_transform_monotonicity(std::size_t sample_count, const AlphaSampler& alpha, std::uint64_t seed) {
  if (sample_count == 0) throw Error(Errc::InvalidParameters, "sample count must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(5, 12);

  PropertyReport report;
  report.requested = sample_count;
  report.min_gain = std::numeric_limits<double>::infinity();
  const std::size_t max_attempts = 100 * sample_count;
  for (std::size_t attempt = 0; attempt < max_attempts && report.tested < sample_count; ++attempt) {
    const Graph g = random_connected_graph(order(rng), rng);
    auto inst = sample_relocation(g, alpha, rng);
    if (!inst) {
      ++report.skipped;
      continue;
    }
    ++report.tested;
    report.min_gain = std::min(report.min_gain, inst->gain());
    if (inst->gain() <= kStrictMargin) report.counterexamples.push_back(*inst);
  }
  return report;
}

}  // namespace sombor
