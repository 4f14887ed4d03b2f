#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "sombor/canonical.hpp"
#include "sombor/error.hpp"
#include "sombor/families.hpp"
#include "sombor/transforms.hpp"
#include "sombor/verify.hpp"

using namespace sombor;

namespace {

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("relocate on C6 leaves a 5-cycle with a pendant") {
  const Graph g = relocate(cycle(6), 0, 5);
  const Graph expected = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
  CHECK(g == expected);
}

TEST_CASE("relocate on a path gives a star and raises SO_alpha") {
  const Graph p = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph g = relocate(p, 1, 2);
  CHECK(g == Graph::from_edge_list(4, {{0, 1}, {1, 2}, {1, 3}}));
  for (double a : {0.25, 0.5, 0.75}) CHECK(general_sombor(g, Alpha(a)) > general_sombor(p, Alpha(a)));
}

TEST_CASE("relocate preconditions") {
  CHECK(error_code([] { relocate(cycle(3), 0, 1); }) == Errc::CommonNeighbor);
  CHECK(error_code([] { relocate(cycle(6), 0, 2); }) == Errc::NotAnEdge);
  const Graph p = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(error_code([&] { relocate(p, 1, 0); }) == Errc::DegreeTooLow);
  CHECK(error_code([&] { relocate(p, 1, 9); }) == Errc::OutOfRange);
  CHECK_FALSE(relocation_applicable(p, 0, 1));
  CHECK(relocation_applicable(p, 2, 1));
}

TEST_CASE("apply_swap reproduces the odd-cycle rewiring") {
  // C7 + u1u5 - u0u6.
  const Graph c7 = cycle(7);
  const Graph g = apply_swap(c7, EdgeSwap{{{1, 5}}, {{0, 6}}});
  CHECK(g.size() == 7);
  CHECK(is_unicyclic(g));
  const double delta = general_sombor(c7, Alpha(0.5)) - general_sombor(g, Alpha(0.5));
  const double expected = 5 * std::sqrt(8.0) - 2 * std::sqrt(10.0) - 2 * std::sqrt(13.0) - std::sqrt(18.0);
  CHECK(delta == doctest::Approx(expected).epsilon(1e-13));
  CHECK(delta == doctest::Approx(-3.636).epsilon(1e-3));
}

TEST_CASE("apply_swap validation") {
  const Graph c4 = cycle(4);
  CHECK(apply_swap(c4, EdgeSwap{}) == c4);
  CHECK(error_code([&] { apply_swap(c4, EdgeSwap{{{0, 1}}, {}}); }) == Errc::AdditionExists);
  CHECK(error_code([&] { apply_swap(c4, EdgeSwap{{}, {{0, 2}}}); }) == Errc::RemovalMissing);
  CHECK(error_code([&] { apply_swap(c4, EdgeSwap{{{2, 2}}, {}}); }) == Errc::SelfLoop);
  CHECK(error_code([&] { apply_swap(c4, EdgeSwap{{{0, 2}, {2, 0}}, {}}); }) == Errc::AdditionExists);
  CHECK(error_code([&] { apply_swap(c4, EdgeSwap{{{0, 7}}, {}}); }) == Errc::OutOfRange);
  // Removals are checked against g, so re-adding a removed edge is refused.
  CHECK(error_code([&] { apply_swap(c4, EdgeSwap{{{0, 1}}, {{0, 1}}}); }) == Errc::AdditionExists);
}

TEST_CASE("swap and pair parsing") {
  const EdgeSwap s = parse_swap("+1,5  -0,6 +2,4");
  CHECK(s.additions == std::vector<Edge>{{1, 5}, {2, 4}});
  CHECK(s.removals == std::vector<Edge>{{0, 6}});
  CHECK(parse_vertex_pair("3,4") == Edge{3, 4});
  CHECK_THROWS_AS(parse_swap("1,5"), Error);
  CHECK_THROWS_AS(parse_swap("+1;5"), Error);
  CHECK_THROWS_AS(parse_vertex_pair("3,"), Error);
}

TEST_CASE("property: relocation bookkeeping, equivariance and strict increase") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> alpha_dist(0.0, 1.0);
  int applied = 0;
  while (applied < 1000) {
    const Graph g = random_connected_graph(5 + rng() % 8, rng);
    std::vector<Edge> candidates;
    for (const auto& [a, b] : g.edges()) {
      if (relocation_applicable(g, a, b)) candidates.emplace_back(a, b);
      if (relocation_applicable(g, b, a)) candidates.emplace_back(b, a);
    }
    if (candidates.empty()) continue;
    ++applied;
    const auto [u, v] = candidates[rng() % candidates.size()];
    const Graph h = relocate(g, u, v);

    CHECK(h.order() == g.order());
    CHECK(h.size() == g.size());
    CHECK(is_connected(h));
    CHECK(h.degree(v) == 1);
    CHECK(h.degree(u) == g.degree(u) + g.degree(v) - 1);
    CHECK(relocate(g, u, v) == h);

    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(relocate(g.relabeled(perm), perm[u], perm[v]) == h.relabeled(perm));

    double a = alpha_dist(rng);
    while (a == 0.0) a = alpha_dist(rng);
    CHECK(general_sombor(h, Alpha(a)) - general_sombor(g, Alpha(a)) > kStrictMargin);
  }
}
