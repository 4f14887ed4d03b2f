#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sombor/error.hpp"
#include "sombor/families.hpp"
#include "sombor/verify.hpp"

namespace sombor {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ConfirmedUnique: return "ConfirmedUnique";
    case Verdict::ConfirmedTied: return "ConfirmedTied";
    case Verdict::Refuted: return "Refuted";
  }
  return "Unknown";
}

Graph predicted_extremal(std::size_t n, std::size_t d) {
  const auto out_of_range = [&] {
    return Error(Errc::OutOfTheoremRange,
                 "no extremal theorem covers n = " + std::to_string(n) + ", d = " + std::to_string(d));
  };
  if (d == 2) {
    if (n < 5) throw out_of_range();
    return c_family(3, n - 3, 0);
  }
  if (d == 3) {
    if (n < 6) throw out_of_range();
    return c_family(3, n - 4, 1);
  }
  if (d >= 4 && n >= d + 2) return u_graph(n, d, 1);
  throw out_of_range();
}

ExtremalReport extremal_search(std::size_t n, std::size_t d, Alpha alpha, double tolerance,
                               const EnumOptions& options) {
  alpha.require_open_unit();
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
    throw Error(Errc::InvalidParameters, "tie tolerance must be a finite non-negative number");
  }
  const auto started = std::chrono::steady_clock::now();

  ExtremalReport report;
  report.n = n;
  report.d = d;
  report.alpha = alpha.value();

  const Graph predicted = predicted_extremal(n, d);
  report.predicted_code = canonical_code(predicted, std::max(n, kDefaultCanonicalLimit));
  report.predicted_value = general_sombor(predicted, alpha);

  const EnumResult cls = enumerate_unicyclic(EnumFilter{n, d, std::nullopt}, options);
  if (cls.count() == 0) {
    throw Error(Errc::EmptyClass, "U_{" + std::to_string(n) + "," + std::to_string(d) + "} is empty");
  }
  report.class_size = cls.count();

  std::vector<double> values(cls.count());
  std::transform(cls.graphs.begin(), cls.graphs.end(), values.begin(),
                 [&](const Graph& g) { return general_sombor(g, alpha); });
  report.max_value = *std::max_element(values.begin(), values.end());

  const double threshold = report.max_value - tolerance * std::max(1.0, std::abs(report.max_value));
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] >= threshold) {
      report.argmax_codes.push_back(cls.codes[k]);
      report.argmax_values.push_back(values[k]);
    }
  }

  // Second pass on reversed labelings: a different edge order and summation.
  double recomputed = -std::numeric_limits<double>::infinity();
  for (const auto& g : cls.graphs) {
    std::vector<Vertex> reverse(g.order());
    std::iota(reverse.rbegin(), reverse.rend(), Vertex{0});
    recomputed = std::max(recomputed, general_sombor(g.relabeled(reverse), alpha));
  }
  report.self_check_passed =
      std::abs(recomputed - report.max_value) <= 1e-12 * std::max(1.0, std::abs(report.max_value));

  const bool predicted_in_argmax = std::binary_search(report.argmax_codes.begin(), report.argmax_codes.end(),
                                                      report.predicted_code);
  if (predicted_in_argmax && report.argmax_codes.size() == 1) {
    report.verdict = Verdict::ConfirmedUnique;
  } else if (predicted_in_argmax) {
    report.verdict = Verdict::ConfirmedTied;
  } else {
    report.verdict = Verdict::Refuted;
  }
  report.runtime = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace sombor
