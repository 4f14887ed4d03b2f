#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sombor/canonical.hpp"
#include "sombor/error.hpp"
#include "sombor/families.hpp"
#include "sombor/verify.hpp"

using namespace sombor;

namespace {

std::vector<Vertex> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("canonical code examples") {
  const Graph c4a = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const Graph c4b = Graph::from_edge_list(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(canonical_code(c4a) == canonical_code(c4b));

  const Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(canonical_code(c4a) != canonical_code(p4));

  CHECK(canonical_code(Graph{}).bytes == "?");
}

TEST_CASE("are_isomorphic") {
  std::mt19937_64 rng(5);
  const Graph c5 = cycle(5);
  CHECK(are_isomorphic(c5, c5.relabeled(random_perm(5, rng))));
  CHECK_FALSE(are_isomorphic(c5, cycle(6)));
  CHECK_FALSE(are_isomorphic(c_family(3, 3, 1), u_graph(7, 3, 1)));
}

TEST_CASE("size limit") {
  CHECK_NOTHROW(canonical_code(cycle(16)));
  try {
    canonical_code(cycle(17));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
  CHECK_THROWS_AS(are_isomorphic(cycle(17), cycle(17)), Error);
  CHECK_NOTHROW(canonical_code(cycle(40), 64));
  CHECK_THROWS_AS(canonical_code(cycle(65), 100), Error);
}

TEST_CASE("canonical form is a relabeling with the same code") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(2 + trial % 9, 0.4, rng);
    const Graph canon = canonical_form(g);
    CHECK(oracle::brute_isomorphic(g, canon));
    CHECK(canonical_code(canon) == canonical_code(g));
    CHECK(to_graph(canonical_code(g)) == canon);
  }
}

TEST_CASE("property: codes are invariant under random relabeling") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Graph g = random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
    const CanonicalCode code = canonical_code(g);
    for (int k = 0; k < 5; ++k) CHECK(canonical_code(g.relabeled(random_perm(n, rng))) == code);
  }
}

TEST_CASE("property: equal codes iff brute-force isomorphic") {
  // Pairs drawn with matching degree sequences so that the brute-force
  // check has to do real work.
  std::mt19937_64 rng(77);
  int iso = 0;
  int non_iso = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 4 + trial % 5;
    const Graph g = random_graph(n, 0.45, rng);
    const Graph h = random_graph(n, 0.45, rng);
    if (g.size() != h.size()) continue;
    const bool expected = oracle::brute_isomorphic(g, h);
    CHECK((canonical_code(g) == canonical_code(h)) == expected);
    (expected ? iso : non_iso)++;
  }
  CHECK(iso > 10);
  CHECK(non_iso > 100);
}

TEST_CASE("highly symmetric graphs stay fast") {
  // Twin pruning: a star with 15 leaves and the empty graph on 16 vertices.
  std::vector<Edge> star;
  for (Vertex v = 1; v < 16; ++v) star.emplace_back(0, v);
  CHECK(canonical_code(Graph::from_edge_list(16, star)).n == 16);
  CHECK(canonical_code(Graph::from_edge_list(16, {})).n == 16);
  CHECK(canonical_code(cycle(16)) == canonical_code(cycle(16).relabeled(std::vector<Vertex>{
                                          3, 1, 4, 15, 5, 9, 2, 6, 8, 7, 0, 10, 11, 12, 13, 14})));
}
