#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sombor/error.hpp"
#include "sombor/verify.hpp"

namespace sombor {

namespace lemma_fn {

double l1_gap(double x, double y, double a) {
  const double s = x - 1.0 + y;
  return std::pow(1.0 + s * s, a) - std::pow(x * x + y * y, a);
}

double l5_f(double x, double a) { return std::pow(x * x + 9.0, a) - std::pow(x * x + 4.0, a); }

namespace {
double l6_common(double x, double a) {
  const double up = (x + 1.0) * (x + 1.0);
  return (x - 1.0) * std::pow(up + 1.0, a) + 2.0 * std::pow(up + 4.0, a) - (x - 1.0) * std::pow(x * x + 1.0, a);
}
}  // namespace

double l6_f1(double x, double a) { return l6_common(x, a) - std::pow(x * x + 4.0, a); }

double l6_f2(double x, double a) { return l6_common(x, a) - std::pow(x * x + 9.0, a); }

double l7_f(double x, double a) {
  const double dn = (x - 1.0) * (x - 1.0);
  return (x - 2.0) * std::pow(x * x + 1.0, a) + 2.0 * std::pow(x * x + 4.0, a) - 2.0 * std::pow(dn + 4.0, a) -
         (x - 3.0) * std::pow(dn + 1.0, a);
}

double g(double x, double a) {
  const double b = a - 1.0;
  return (x - 1.0) * (x + 1.0) * std::pow(x * x + 2.0 * x + 2.0, b) +
         2.0 * (x + 1.0) * std::pow(x * x + 2.0 * x + 5.0, b) - x * (x - 1.0) * std::pow(x * x + 1.0, b) -
         x * std::pow(x * x + 4.0, b);
}

double h(double x, double a) {
  const double b = a - 1.0;
  const double dn = (x - 1.0) * (x - 1.0);
  return (x - 2.0) * x * std::pow(x * x + 1.0, b) + 2.0 * x * std::pow(x * x + 4.0, b) -
         (x - 3.0) * (x - 1.0) * std::pow(dn + 1.0, b) - 2.0 * (x - 1.0) * std::pow(dn + 4.0, b);
}

}  // namespace lemma_fn

namespace {

enum class Sense { NonNegative, Positive, Negative };

PointStatus classify(double value, Sense sense) {
  const double signed_value = sense == Sense::Negative ? -value : value;
  if (signed_value > kStrictMargin) return PointStatus::Ok;
  if (signed_value >= -kStrictMargin) return PointStatus::Boundary;
  return PointStatus::Violation;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::BadGrid, what);
}

void validate_grid(const Grid& grid, const char* name) {
  require(std::isfinite(grid.start) && std::isfinite(grid.stop) && std::isfinite(grid.step),
          std::string(name) + " grid must be finite");
  require(grid.step > 0.0, std::string(name) + " grid step must be positive");
  require(grid.stop >= grid.start, std::string(name) + " grid stop precedes start");
}

class Recorder {
 public:
  explicit Recorder(LemmaReport& report) : report_(report) {}

  void record(LemmaPoint point, Sense sense) {
    point.status = classify(point.value, sense);
    ++report_.points_checked;
    const double margin = std::abs(point.value);
    if (!report_.tightest || margin < report_.min_margin) {
      report_.min_margin = margin;
      report_.tightest = point;
    }
    if (point.status == PointStatus::Violation) report_.violations.push_back(point);
    if (point.status == PointStatus::Boundary) report_.boundary.push_back(point);
  }

 private:
  LemmaReport& report_;
};

}  // namespace

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L1: return "L1";
    case LemmaId::L5: return "L5";
    case LemmaId::L6: return "L6";
    case LemmaId::L7: return "L7";
    case LemmaId::GPos: return "gpos";
    case LemmaId::HPos: return "hpos";
  }
  return "unknown";
}

LemmaId parse_lemma_id(std::string_view text) {
  for (LemmaId id : {LemmaId::L1, LemmaId::L5, LemmaId::L6, LemmaId::L7, LemmaId::GPos, LemmaId::HPos}) {
    if (text == to_string(id)) return id;
  }
  throw Error(Errc::ParseError, "unknown lemma id '" + std::string(text) + "'");
}

std::string_view to_string(PointStatus s) {
  switch (s) {
    case PointStatus::Ok: return "ok";
    case PointStatus::Boundary: return "boundary";
    case PointStatus::Violation: return "violation";
  }
  return "unknown";
}

std::vector<double> Grid::points() const {
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(start + static_cast<double>(k) * step);
  return out;
}

Grid default_alpha_grid(LemmaId id) {
  if (id == LemmaId::L1) return {0.1, 2.0, 0.1};
  return {0.02, 0.98, 0.02};
}

Grid default_x_grid(LemmaId id) {
  switch (id) {
    case LemmaId::L1: return {1.0, 50.0, 0.5};
    case LemmaId::L5: return {0.1, 50.0, 0.1};
    case LemmaId::L6:
    case LemmaId::GPos: return {1.0, 50.0, 0.1};
    case LemmaId::L7:
    case LemmaId::HPos: return {3.0, 50.0, 0.1};
  }
  return {1.0, 50.0, 0.1};
}

std::optional<Grid> default_y_grid(LemmaId id) {
  if (id == LemmaId::L1) return Grid{1.0, 50.0, 0.5};
  return std::nullopt;
}

LemmaReport check_lemma(LemmaId id, const Grid& alpha_grid, const Grid& x_grid, const std::optional<Grid>& y_grid) {
  validate_grid(alpha_grid, "alpha");
  validate_grid(x_grid, "x");

  const std::string name(to_string(id));
  if (id == LemmaId::L1) {
    require(y_grid.has_value(), "L1 needs a y grid");
    validate_grid(*y_grid, "y");
    require(alpha_grid.start > 0.0, "L1 needs alpha > 0");
    require(x_grid.start >= 1.0 && y_grid->start >= 1.0, "L1 needs x, y >= 1");
  } else {
    require(!y_grid.has_value(), name + " is one-dimensional");
    require(alpha_grid.start > 0.0 && alpha_grid.points().back() < 1.0, name + " needs 0 < alpha < 1");
    switch (id) {
      case LemmaId::L5: require(x_grid.start > 0.0, "L5 needs x > 0"); break;
      case LemmaId::L6:
      case LemmaId::GPos: require(x_grid.start >= 1.0, name + " needs x >= 1"); break;
      default: require(x_grid.start >= 3.0, name + " needs x >= 3"); break;
    }
  }

  LemmaReport report;
  report.id = id;
  report.alpha_grid = alpha_grid;
  report.x_grid = x_grid;
  report.y_grid = y_grid;
  Recorder rec(report);

  const double delta = x_grid.step;
  const auto xs = x_grid.points();
  for (double a : alpha_grid.points()) {
    for (double x : xs) {
      switch (id) {
        case LemmaId::L1:
          for (double y : y_grid->points()) rec.record({"gap", a, x, y, lemma_fn::l1_gap(x, y, a)}, Sense::NonNegative);
          break;
        case LemmaId::L5:
          rec.record({"f", a, x, std::nullopt, lemma_fn::l5_f(x + delta, a) - lemma_fn::l5_f(x, a)}, Sense::Negative);
          break;
        case LemmaId::L6:
          rec.record({"f1", a, x, std::nullopt, lemma_fn::l6_f1(x + delta, a) - lemma_fn::l6_f1(x, a)},
                     Sense::Positive);
          rec.record({"f2", a, x, std::nullopt, lemma_fn::l6_f2(x + delta, a) - lemma_fn::l6_f2(x, a)},
                     Sense::Positive);
          break;
        case LemmaId::L7:
          rec.record({"f", a, x, std::nullopt, lemma_fn::l7_f(x + delta, a) - lemma_fn::l7_f(x, a)}, Sense::Positive);
          break;
        case LemmaId::GPos: rec.record({"g", a, x, std::nullopt, lemma_fn::g(x, a)}, Sense::Positive); break;
        case LemmaId::HPos: rec.record({"h", a, x, std::nullopt, lemma_fn::h(x, a)}, Sense::Positive); break;
      }
    }
  }
  return report;
}

LemmaReport check_lemma(LemmaId id) {
  return check_lemma(id, default_alpha_grid(id), default_x_grid(id), default_y_grid(id));
}

// ---------------------------------------------------------------------------

namespace {

double p(double base, double a) { return std::pow(base, a); }

// clang-format off
const std::vector<ProofConstant> kCatalog = {
    {"lemma3odd", "2(8^a-13^a)+8^a-18^a+2(8^a-10^a)",
     [](double a) { return 2 * (p(8, a) - p(13, a)) + p(8, a) - p(18, a) + 2 * (p(8, a) - p(10, a)); },
     1.0, 1.0, std::nullopt},
    {"subcase22", "8^a-13^a+20^a-17^a",
     [](double a) { return p(8, a) - p(13, a) + p(20, a) - p(17, a); },
     1.90056, 1.9, 1.90056, 1.5, 2.5},
    {"prop2case2", "10^a-5^a+2*13^a+2*8^a-3*20^a-17^a",
     [](double a) { return p(10, a) - p(5, a) + 2 * p(13, a) + 2 * p(8, a) - 3 * p(20, a) - p(17, a); },
     1.0, 1.0, std::nullopt},
    {"thm1case1", "2*8^a-10^a-18^a",
     [](double a) { return 2 * p(8, a) - p(10, a) - p(18, a); },
     1.0, 1.0, std::nullopt},
    {"thm1claim2a", "18^a-13^a+5^a-10^a",
     [](double a) { return p(18, a) - p(13, a) + p(5, a) - p(10, a); },
     1.0, 1.0, std::nullopt},
    {"thm1claim2b", "18^a+8^a-2*13^a",
     [](double a) { return p(18, a) + p(8, a) - 2 * p(13, a); },
     1.0, 1.0, std::nullopt},
    {"claim3case1", "13^a-18^a+8^a-10^a",
     [](double a) { return p(13, a) - p(18, a) + p(8, a) - p(10, a); },
     1.0, 1.0, std::nullopt},
    {"claim3case2", "2(8^a-10^a)",
     [](double a) { return 2 * (p(8, a) - p(10, a)); },
     1.0, 1.0, std::nullopt},
    {"claim4case1", "18^a-20^a",
     [](double a) { return p(18, a) - p(20, a); },
     1.0, 1.0, std::nullopt},
    {"claim4case2", "2(10^a-17^a)+2(13^a-20^a)+10^a-5^a",
     [](double a) { return 2 * (p(10, a) - p(17, a)) + 2 * (p(13, a) - p(20, a)) + p(10, a) - p(5, a); },
     1.0, 1.0, std::nullopt},
};
// clang-format on

}  // namespace

const std::vector<ProofConstant>& constant_catalog() { return kCatalog; }

const ProofConstant& find_constant(std::string_view id) {
  for (const auto& c : kCatalog) {
    if (c.id == id) return c;
  }
  throw Error(Errc::UnknownConstant, "no constant named '" + std::string(id) + "'");
}

std::optional<double> locate_sign_change(const ProofConstant& c, double lo, double hi, double tolerance) {
  double flo = c.evaluate(lo);
  const double fhi = c.evaluate(hi);
  if ((flo < 0) == (fhi < 0)) return std::nullopt;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = c.evaluate(mid);
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool ConstantReport::root_matches(double tolerance) const {
  if (!stated_root) return true;
  return located_root && std::abs(*located_root - *stated_root) <= tolerance;
}

ConstantReport check_constant(std::string_view id, std::optional<double> alpha_max, double step) {
  const ProofConstant& c = find_constant(id);
  const double top = alpha_max.value_or(c.default_max);
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(Errc::BadGrid, "alpha step must be positive");
  if (!(top > 0.0) || top > c.validity_limit) {
    throw Error(Errc::BadGrid, c.id + " is only claimed negative for 0 < alpha < " + std::to_string(c.validity_limit));
  }

  ConstantReport report;
  report.id = c.id;
  report.expression = c.expression;
  report.alpha_max = top;
  report.step = step;
  report.stated_root = c.stated_root;
  report.max_value = -std::numeric_limits<double>::infinity();

  for (std::size_t k = 1;; ++k) {
    const double a = static_cast<double>(k) * step;
    if (a > top + 1e-12 || a >= c.validity_limit) break;
    const double value = c.evaluate(a);
    ++report.points_checked;
    report.max_value = std::max(report.max_value, value);
    if (value > kStrictMargin) {
      report.violations.emplace_back(a, value);
    } else if (value >= -kStrictMargin) {
      ++report.boundary_points;
    }
  }
  if (c.stated_root) report.located_root = locate_sign_change(c, c.bracket_lo, c.bracket_hi);
  return report;
}

}  // namespace sombor
