#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/canonical.hpp"
#include "sombor/enumerate.hpp"
#include "sombor/graph.hpp"
#include "sombor/index.hpp"

namespace sombor {

// Inequalities claimed strict count as violated only when the value is on
// the wrong side of zero by more than this; closer values are "boundary".
inline constexpr double kStrictMargin = 1e-12;
inline constexpr double kDefaultTieTolerance = 1e-9;

// ---------------------------------------------------------------------------
// Exhaustive extremal search

enum class Verdict { ConfirmedUnique, ConfirmedTied, Refuted };
std::string_view to_string(Verdict v);

/// The graph the theorems name as the unique maximiser of SO_alpha on U_{n,d}:
///   d = 2: C_2(3, n-3, 0)    d = 3: C_3(3, n-4, 1)    d >= 4: U(n, d).
/// d in {2, 3} is accepted for n >= d+3, d >= 4 for n >= d+2.
/// Throws Error{OutOfTheoremRange} elsewhere.
Graph predicted_extremal(std::size_t n, std::size_t d);

struct ExtremalReport {
  std::size_t n = 0;
  std::size_t d = 0;
  double alpha = 0.0;
  std::size_t class_size = 0;
  double max_value = 0.0;
  std::vector<CanonicalCode> argmax_codes;  // sorted
  std::vector<double> argmax_values;
  CanonicalCode predicted_code;
  double predicted_value = 0.0;
  Verdict verdict = Verdict::Refuted;
  bool self_check_passed = false;  // max recomputed on relabeled copies agrees
  std::chrono::duration<double> runtime{};
};

/// Enumerates U_{n,d}, evaluates SO_alpha on every class, groups values
/// within relative `tolerance` of the maximum and compares the group to
/// predicted_extremal(n, d).
/// Throws Error{InvalidAlpha} outside 0 < alpha < 1, Error{EmptyClass}, and
/// whatever predicted_extremal / enumerate_unicyclic throw.
ExtremalReport extremal_search(std::size_t n, std::size_t d, Alpha alpha, double tolerance = kDefaultTieTolerance,
                               const EnumOptions& options = {});

// ---------------------------------------------------------------------------
// Analytic claims checked on grids (evidence, not proof)

enum class LemmaId { L1, L5, L6, L7, GPos, HPos };
std::string_view to_string(LemmaId id);
/// Accepts "L1", "L5", "L6", "L7", "gpos", "hpos". Throws Error{ParseError}.
LemmaId parse_lemma_id(std::string_view text);

struct Grid {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  /// start, start + step, ... up to stop (inclusive, up to rounding).
  std::vector<double> points() const;
};

enum class PointStatus { Ok, Boundary, Violation };
std::string_view to_string(PointStatus s);

struct LemmaPoint {
  std::string quantity;  // which function of the lemma was evaluated
  double alpha = 0.0;
  double x = 0.0;
  std::optional<double> y;  // second coordinate, L1 only
  double value = 0.0;
  PointStatus status = PointStatus::Ok;
};

struct LemmaReport {
  LemmaId id = LemmaId::L1;
  Grid alpha_grid;
  Grid x_grid;
  std::optional<Grid> y_grid;
  std::size_t points_checked = 0;
  std::vector<LemmaPoint> violations;
  std::vector<LemmaPoint> boundary;
  double min_margin = 0.0;  // smallest |value| seen
  std::optional<LemmaPoint> tightest;

  bool passed() const noexcept { return violations.empty(); }
};

// The analytic functions themselves.
namespace lemma_fn {
double l1_gap(double x, double y, double alpha);  // (1+(x-1+y)^2)^a - (x^2+y^2)^a
double l5_f(double x, double alpha);              // (x^2+9)^a - (x^2+4)^a
double l6_f1(double x, double alpha);
double l6_f2(double x, double alpha);
double l7_f(double x, double alpha);
double g(double x, double alpha);
/// Bracket bounding f'(x)/(2 alpha) from below for the L7 function; every
/// power carries the exponent alpha - 1.
double h(double x, double alpha);
}  // namespace lemma_fn

Grid default_alpha_grid(LemmaId id);
Grid default_x_grid(LemmaId id);
std::optional<Grid> default_y_grid(LemmaId id);

/// Evaluates the lemma's defining quantity at every grid point: L1 the gap
/// (>= 0), L5 forward differences (< 0), L6/L7 forward differences (> 0),
/// gpos/hpos the function value (> 0). Monotonicity uses delta = x step.
/// Throws Error{BadGrid} if a grid leaves the lemma's domain.
LemmaReport check_lemma(LemmaId id, const Grid& alpha_grid, const Grid& x_grid,
                        const std::optional<Grid>& y_grid = std::nullopt);
LemmaReport check_lemma(LemmaId id);

// ---------------------------------------------------------------------------
// Numeric constants used in the case analyses; each is claimed negative.

struct ProofConstant {
  std::string id;
  std::string expression;
  double (*evaluate)(double alpha);
  double validity_limit;  // claimed negative for 0 < alpha < validity_limit
  double default_max;     // default upper end of the scan
  std::optional<double> stated_root;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

const std::vector<ProofConstant>& constant_catalog();
/// Throws Error{UnknownConstant}.
const ProofConstant& find_constant(std::string_view id);

struct ConstantReport {
  std::string id;
  std::string expression;
  double alpha_max = 0.0;
  double step = 0.0;
  std::size_t points_checked = 0;
  std::vector<std::pair<double, double>> violations;  // (alpha, value)
  std::size_t boundary_points = 0;
  double max_value = 0.0;  // closest approach to zero from below
  std::optional<double> stated_root;
  std::optional<double> located_root;

  bool root_matches(double tolerance = 1e-3) const;
  bool passed() const { return violations.empty() && root_matches(); }
};

/// Scans alpha = step, 2 step, ... <= alpha_max (and < validity limit).
/// Throws Error{BadGrid} if alpha_max exceeds the constant's validity.
ConstantReport check_constant(std::string_view id, std::optional<double> alpha_max = std::nullopt,
                              double step = 1e-3);

/// Bisection for a sign change of `c` on [lo, hi] down to width `tolerance`.
/// Returns nullopt when the endpoints have the same sign.
std::optional<double> locate_sign_change(const ProofConstant& c, double lo, double hi, double tolerance = 1e-4);

// ---------------------------------------------------------------------------
// Relocation monotonicity on random graphs

class AlphaSampler {
 public:
  static AlphaSampler fixed(double alpha);
  static AlphaSampler uniform(double lo, double hi);

  double draw(std::mt19937_64& rng) const;
  std::string describe() const;

 private:
  AlphaSampler(double lo, double hi) : lo_(lo), hi_(hi) {}
  double lo_;
  double hi_;
};

struct RelocationInstance {
  std::string graph6;
  Vertex u = 0;
  Vertex v = 0;
  double alpha = 0.0;
  double before = 0.0;
  double after = 0.0;

  double gain() const noexcept { return after - before; }
};

struct PropertyReport {
  std::size_t requested = 0;
  std::size_t tested = 0;
  std::size_t skipped = 0;  // graphs without an applicable edge
  std::vector<RelocationInstance> counterexamples;
  double min_gain = 0.0;

  bool passed() const noexcept { return counterexamples.empty() && tested == requested; }
};

/// Picks a uniformly random applicable edge of g (either orientation),
/// relocates and evaluates both sides. nullopt when no edge is applicable.
std::optional<RelocationInstance> sample_relocation(const Graph& g, const AlphaSampler& alpha, std::mt19937_64& rng);

/// Random connected graph: random recursive tree on n vertices, randomly
/// relabeled, plus up to n random extra edges.
Graph random_connected_graph(std::size_t n, std::mt19937_64& rng);

/// Draws random connected graphs (5..12 vertices) until `sample_count`
/// relocations have been tested; graphs with no applicable edge are skipped
/// and counted. An instance fails when the gain is <= kStrictMargin.
PropertyReport verify_transform_monotonicity(std::size_t sample_count, const AlphaSampler& alpha, std::uint64_t seed);

}  // namespace sombor
