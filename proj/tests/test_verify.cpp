#include <doctest.h>

#include <cmath>
#include <random>

#include "sombor/error.hpp"
#include "sombor/families.hpp"
#include "sombor/graph_io.hpp"
#include "sombor/verify.hpp"

using namespace sombor;

TEST_CASE("predicted_extremal names the theorem graphs") {
  CHECK(are_isomorphic(predicted_extremal(7, 2), c_family(3, 4, 0)));
  CHECK(are_isomorphic(predicted_extremal(6, 3), c_family(3, 2, 1)));
  CHECK(are_isomorphic(predicted_extremal(8, 4), u_graph(8, 4, 1)));
  CHECK(diameter(predicted_extremal(9, 5)) == 5);
  CHECK_THROWS_AS(predicted_extremal(4, 2), Error);
  CHECK_THROWS_AS(predicted_extremal(5, 3), Error);
  CHECK_THROWS_AS(predicted_extremal(5, 4), Error);
  CHECK_THROWS_AS(predicted_extremal(8, 1), Error);
}

TEST_CASE("extremal_search confirms small cases") {
  struct Case {
    std::size_t n, d;
    double alpha;
  };
  for (const Case c : {Case{8, 4, 0.5}, Case{7, 2, 0.5}, Case{6, 3, 0.25}}) {
    CAPTURE(c.n);
    CAPTURE(c.d);
    const ExtremalReport r = extremal_search(c.n, c.d, Alpha(c.alpha));
    CHECK(r.verdict == Verdict::ConfirmedUnique);
    CHECK(r.self_check_passed);
    CHECK(r.argmax_codes.size() == 1);
    CHECK(r.argmax_codes.front() == r.predicted_code);
    CHECK(r.max_value == doctest::Approx(r.predicted_value).epsilon(1e-12));
    CHECK(r.class_size >= 1);
  }
}

TEST_CASE("extremal_search tolerance and alpha range") {
  const ExtremalReport loose = extremal_search(7, 3, Alpha(0.5), 1.0);
  CHECK(loose.verdict == Verdict::ConfirmedTied);
  CHECK(loose.argmax_codes.size() == loose.class_size);
  CHECK_THROWS_AS(extremal_search(7, 3, Alpha(1.0)), Error);
  CHECK_THROWS_AS(extremal_search(7, 3, Alpha(0.0)), Error);
  CHECK_THROWS_AS(extremal_search(7, 3, Alpha(1.5)), Error);
  CHECK_THROWS_AS(extremal_search(5, 4, Alpha(0.5)), Error);
}

TEST_CASE("lemma functions at known points") {
  CHECK(lemma_fn::l5_f(1.0, 0.5) == doctest::Approx(std::sqrt(10.0) - std::sqrt(5.0)).epsilon(1e-14));
  CHECK(lemma_fn::l5_f(1.0, 0.5) == doctest::Approx(0.926).epsilon(1e-3));
  CHECK(lemma_fn::l5_f(1.1, 0.5) < lemma_fn::l5_f(1.0, 0.5));
  CHECK(lemma_fn::l1_gap(1.0, 1.0, 1.0) == doctest::Approx(0.0));
  CHECK(lemma_fn::l1_gap(3.0, 2.0, 0.5) > 0.0);
  CHECK(lemma_fn::g(1.0, 0.5) == doctest::Approx(4.0 / std::sqrt(8.0) - 1.0 / std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("h carries alpha - 1 on every power term") {
  // The printed bracket puts exponent alpha on the first and last terms and is
  // negative at (3, 0.5); with alpha - 1 everywhere it is positive.
  const double x = 3.0;
  const double a = 0.5;
  const double dn = (x - 1) * (x - 1);
  const double printed = (x - 2) * x * std::pow(x * x + 1, a) + 2 * x * std::pow(x * x + 4, a - 1) -
                         (x - 3) * (x - 1) * std::pow(dn + 1, a - 1) - 2 * (x - 1) * std::pow(dn + 4, a);
  CHECK(printed == doctest::Approx(-0.163).epsilon(1e-2));
  CHECK(printed < 0.0);
  CHECK(lemma_fn::h(x, a) > 0.0);
}

TEST_CASE("check_lemma on small grids") {
  for (LemmaId id : {LemmaId::L5, LemmaId::L6, LemmaId::L7, LemmaId::GPos, LemmaId::HPos}) {
    CAPTURE(to_string(id));
    Grid x = default_x_grid(id);
    x.stop = x.start + 5.0;
    const LemmaReport r = check_lemma(id, Grid{0.1, 0.9, 0.2}, x);
    CHECK(r.passed());
    CHECK(r.points_checked > 0);
    CHECK(r.tightest.has_value());
  }
  const LemmaReport l1 = check_lemma(LemmaId::L1, Grid{0.5, 1.0, 0.5}, Grid{1.0, 3.0, 1.0}, Grid{1.0, 3.0, 1.0});
  CHECK(l1.passed());
  CHECK(l1.points_checked == 2 * 3 * 3);
  // Equality at y = 1 is reported, not counted as a violation.
  CHECK_FALSE(l1.boundary.empty());
  CHECK(l1.min_margin == doctest::Approx(0.0));
}

TEST_CASE("check_lemma rejects grids outside the domain") {
  CHECK_THROWS_AS(check_lemma(LemmaId::L5, Grid{0.1, 1.2, 0.1}, Grid{1.0, 2.0, 0.1}), Error);
  CHECK_THROWS_AS(check_lemma(LemmaId::L7, Grid{0.1, 0.9, 0.1}, Grid{1.0, 5.0, 0.1}), Error);
  CHECK_THROWS_AS(check_lemma(LemmaId::L6, Grid{0.1, 0.9, -0.1}, Grid{1.0, 5.0, 0.1}), Error);
  CHECK_THROWS_AS(check_lemma(LemmaId::L1, Grid{0.1, 0.9, 0.1}, Grid{1.0, 5.0, 1.0}), Error);
  CHECK(parse_lemma_id("hpos") == LemmaId::HPos);
  CHECK_THROWS_AS(parse_lemma_id("L9"), Error);
}

TEST_CASE("grid points") {
  CHECK(Grid{0.02, 0.98, 0.02}.points().size() == 49);
  CHECK(Grid{1.0, 50.0, 0.5}.points().size() == 99);
  CHECK(Grid{1.0, 1.0, 0.1}.points().size() == 1);
}

TEST_CASE("proof constants") {
  const ProofConstant& sub = find_constant("subcase22");
  CHECK(sub.evaluate(0.5) == doctest::Approx(-0.4280938).epsilon(1e-6));
  CHECK(find_constant("lemma3odd").evaluate(0.5) == doctest::Approx(-3.636).epsilon(1e-3));
  CHECK_THROWS_AS(find_constant("nope"), Error);

  const ConstantReport r = check_constant("subcase22");
  CHECK(r.passed());
  REQUIRE(r.located_root.has_value());
  CHECK(std::abs(*r.located_root - 1.90056) <= 1e-3);
  CHECK_THROWS_AS(check_constant("subcase22", 2.0), Error);
  CHECK_THROWS_AS(check_constant("thm1case1", 0.5, 0.0), Error);

  for (const auto& c : constant_catalog()) {
    CAPTURE(c.id);
    CHECK(check_constant(c.id).passed());
  }
}

TEST_CASE("relocation sampling") {
  std::mt19937_64 rng(7);
  const auto inst = sample_relocation(cycle(6), AlphaSampler::fixed(0.75), rng);
  REQUIRE(inst.has_value());
  CHECK(inst->gain() > 0.0);
  CHECK(inst->alpha == 0.75);
  const Graph star = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK_FALSE(sample_relocation(star, AlphaSampler::fixed(0.5), rng).has_value());

  for (int k = 0; k < 50; ++k) {
    const Graph g = random_connected_graph(5 + k % 8, rng);
    CHECK(is_connected(g));
  }
}

TEST_CASE("monotonicity sample at alpha = 0.5") {
  const PropertyReport r = verify_transform_monotonicity(1000, AlphaSampler::fixed(0.5), 42);
  CHECK(r.tested == 1000);
  CHECK(r.counterexamples.empty());
  CHECK(r.min_gain > kStrictMargin);
  CHECK(r.passed());
  const PropertyReport again = verify_transform_monotonicity(1000, AlphaSampler::fixed(0.5), 42);
  CHECK(again.min_gain == r.min_gain);
  CHECK(again.skipped == r.skipped);
}
