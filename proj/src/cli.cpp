#include "sombor/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "sombor/error.hpp"
#include "sombor/families.hpp"
#include "sombor/graph_io.hpp"
#include "sombor/index.hpp"
#include "sombor/transforms.hpp"
#include "sombor/verify.hpp"

namespace sombor::cli {

std::string format_real(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw Error(Errc::ParseError, "cannot write " + path);
  return file;
}

void emit_graph6(const Graph& g, const std::string& out_path, std::ostream& out) {
  const std::string line = to_graph6(g);
  out << line << '\n';
  if (!out_path.empty()) open_output(out_path) << line << '\n';
}

Graph read_single_graph(const std::string& path) {
  auto graphs = read_graphs(path);
  if (graphs.empty()) throw Error(Errc::ParseError, path + " contains no graph");
  return graphs.front();
}

std::string join_codes(const std::vector<CanonicalCode>& codes) {
  std::string out;
  for (const auto& c : codes) {
    if (!out.empty()) out += ';';
    out += c.bytes;
  }
  return out;
}

struct Options {
  // index / transform
  std::string in_path;
  std::string out_path;
  std::string report_path;
  double alpha = 0.5;
  // family
  std::string spec;
  bool closed_form = false;
  // enumerate / extremal
  std::size_t n = 0;
  std::size_t d = 0;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> girth;
  bool count_only = false;
  std::size_t max_n = kDefaultUnicyclicCap;
  unsigned jobs = 0;
  double tolerance = kDefaultTieTolerance;
  bool timing = false;
  // transform
  std::string relocate_pair;
  std::string swap_text;
  // check-lemma
  std::string lemma_id;
  std::optional<double> alpha_start, alpha_stop, alpha_step;
  std::optional<double> x_start, x_stop, x_step;
  std::optional<double> y_start, y_stop, y_step;
  // check-constant
  std::string constant_id;
  std::optional<double> alpha_max;
  double constant_step = 1e-3;
  // prop-test
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  std::optional<double> fixed_alpha;
};

int cmd_index(const Options& o, std::ostream& out) {
  const Alpha alpha(o.alpha);
  for (const auto& g : read_graphs(o.in_path)) out << format_real(general_sombor(g, alpha)) << '\n';
  return kExitOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  const FamilySpec spec = parse_family_spec(o.spec);
  const Graph g = build(spec);
  if (o.closed_form) {
    if (spec.kind != FamilySpec::Kind::U || spec.params[2] != 1) {
      throw Error(Errc::InvalidParameters, "--closed-form applies to U:n,d,1 only");
    }
    out << format_real(closed_form_u(spec.params[0], spec.params[1], Alpha(o.alpha))) << '\n';
  }
  emit_graph6(g, o.out_path, out);
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const EnumFilter filter{o.n, o.diameter, o.girth};
  const EnumOptions options{o.max_n, o.jobs};
  if (o.count_only) {
    out << count_unicyclic(filter, options) << '\n';
    return kExitOk;
  }
  const EnumResult result = enumerate_unicyclic(filter, options);
  if (o.out_path.empty()) {
    for (const auto& code : result.codes) out << code.bytes << '\n';
  } else {
    auto file = open_output(o.out_path);
    for (const auto& code : result.codes) file << code.bytes << '\n';
    out << result.count() << '\n';
  }
  return kExitOk;
}

int cmd_transform(const Options& o, std::ostream& out) {
  const Graph g = read_single_graph(o.in_path);
  Graph result;
  if (!o.relocate_pair.empty()) {
    const auto [u, v] = parse_vertex_pair(o.relocate_pair);
    result = relocate(g, u, v);
  } else {
    result = apply_swap(g, parse_swap(o.swap_text));
  }
  emit_graph6(result, o.out_path, out);
  return kExitOk;
}

int cmd_extremal(const Options& o, std::ostream& out) {
  const ExtremalReport r = extremal_search(o.n, o.d, Alpha(o.alpha), o.tolerance, EnumOptions{o.max_n, o.jobs});
  out << "n=" << r.n << " d=" << r.d << " alpha=" << format_real(r.alpha) << " class_size=" << r.class_size
      << " max_value=" << format_real(r.max_value) << " verdict=" << to_string(r.verdict) << '\n'
      << "argmax=" << join_codes(r.argmax_codes) << " predicted=" << r.predicted_code.bytes
      << " predicted_value=" << format_real(r.predicted_value) << '\n'
      << "self_check=" << (r.self_check_passed ? "ok" : "MISMATCH") << " seconds=" << r.runtime.count() << '\n';
  if (!o.report_path.empty()) {
    auto file = open_output(o.report_path);
    file << "n,d,alpha,max_value,argmax_g6,predicted_g6,verdict,seconds\n"
         << r.n << ',' << r.d << ',' << format_real(r.alpha) << ',' << format_real(r.max_value) << ','
         << join_codes(r.argmax_codes) << ',' << r.predicted_code.bytes << ',' << to_string(r.verdict) << ','
         << (o.timing ? format_real(r.runtime.count()) : std::string()) << '\n';
  }
  return r.verdict == Verdict::ConfirmedUnique && r.self_check_passed ? kExitOk : kExitCheckFailed;
}

void write_lemma_row(std::ostream& file, const LemmaReport& r, const LemmaPoint& p, std::string_view status) {
  file << to_string(r.id) << ':' << p.quantity << ',' << format_real(p.alpha) << ',' << format_real(p.x) << ','
       << (p.y ? format_real(*p.y) : std::string()) << ',' << format_real(p.value) << ',' << status << '\n';
}

int cmd_check_lemma(const Options& o, std::ostream& out) {
  const LemmaId id = parse_lemma_id(o.lemma_id);
  Grid alpha = default_alpha_grid(id);
  Grid x = default_x_grid(id);
  std::optional<Grid> y = default_y_grid(id);
  auto apply = [](Grid& g, const std::optional<double>& start, const std::optional<double>& stop,
                  const std::optional<double>& step) {
    if (start) g.start = *start;
    if (stop) g.stop = *stop;
    if (step) g.step = *step;
  };
  apply(alpha, o.alpha_start, o.alpha_stop, o.alpha_step);
  apply(x, o.x_start, o.x_stop, o.x_step);
  if (y) {
    apply(*y, o.y_start, o.y_stop, o.y_step);
  } else if (o.y_start || o.y_stop || o.y_step) {
    throw Error(Errc::BadGrid, std::string(to_string(id)) + " takes no y grid");
  }

  const LemmaReport r = check_lemma(id, alpha, x, y);
  out << "lemma=" << to_string(id) << " points=" << r.points_checked << " violations=" << r.violations.size()
      << " boundary=" << r.boundary.size() << " min_margin=" << format_real(r.min_margin)
      << " result=" << (r.passed() ? "pass" : "FAIL") << " (grid evidence, not a proof)\n";
  if (!o.report_path.empty()) {
    auto file = open_output(o.report_path);
    file << "lemma,alpha,x,y,value,status\n";
    for (const auto& p : r.violations) write_lemma_row(file, r, p, to_string(p.status));
    for (const auto& p : r.boundary) write_lemma_row(file, r, p, to_string(p.status));
    if (r.tightest) write_lemma_row(file, r, *r.tightest, "tightest");
  }
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_check_constant(const Options& o, std::ostream& out) {
  std::vector<std::string> ids;
  if (o.constant_id == "all") {
    if (o.alpha_max) throw Error(Errc::BadGrid, "--alpha-max needs a single --id");
    for (const auto& c : constant_catalog()) ids.push_back(c.id);
  } else {
    ids.push_back(o.constant_id);
  }
  bool all_passed = true;
  for (const auto& id : ids) {
    const ConstantReport r = check_constant(id, o.alpha_max, o.constant_step);
    const bool open_end = r.alpha_max >= find_constant(r.id).validity_limit;
    out << r.id << ": " << r.expression << " on (0, " << format_real(r.alpha_max) << (open_end ? ") step " : "] step ")
        << format_real(r.step) << " points=" << r.points_checked << " violations=" << r.violations.size()
        << " max_value=" << format_real(r.max_value);
    if (r.stated_root) {
      out << " stated_root=" << format_real(*r.stated_root)
          << " located_root=" << (r.located_root ? format_real(*r.located_root) : std::string("none"));
    }
    out << " result=" << (r.passed() ? "pass" : "FAIL") << '\n';
    for (const auto& [a, v] : r.violations) out << "  violation alpha=" << format_real(a) << " value=" << format_real(v) << '\n';
    all_passed = all_passed && r.passed();
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_prop_test(const Options& o, std::ostream& out) {
  const AlphaSampler sampler = o.fixed_alpha ? AlphaSampler::fixed(*o.fixed_alpha) : AlphaSampler::uniform(0.0, 1.0);
  const PropertyReport r = verify_transform_monotonicity(o.samples, sampler, o.seed);
  out << "samples=" << r.requested << " tested=" << r.tested << " skipped=" << r.skipped
      << " counterexamples=" << r.counterexamples.size() << " min_gain=" << format_real(r.min_gain)
      << " alpha=" << sampler.describe() << " seed=" << o.seed << " result=" << (r.passed() ? "pass" : "FAIL") << '\n';
  for (const auto& c : r.counterexamples) {
    out << "  counterexample g6=" << c.graph6 << " u=" << c.u << " v=" << c.v << " alpha=" << format_real(c.alpha)
        << " before=" << format_real(c.before) << " after=" << format_real(c.after) << '\n';
  }
  return r.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"General Sombor index workbench for unicyclic graphs"};
  app.require_subcommand(1);
  Options o;

  auto* index = app.add_subcommand("index", "SO_alpha of every graph in a graph6 or edge-list file");
  index->add_option("--in", o.in_path, "Input file")->required();
  index->add_option("--alpha", o.alpha, "Exponent alpha")->required();

  auto* family = app.add_subcommand("family", "Build a named family member");
  family->add_option("--spec", o.spec, "C:n | U:n,d,i | CF:p,q,r")->required();
  family->add_option("--out", o.out_path, "Also write graph6 here");
  auto* closed = family->add_flag("--closed-form", o.closed_form, "Print the closed-form SO_alpha(U(n,d))");
  family->add_option("--alpha", o.alpha, "Exponent alpha")->needs(closed);

  auto* enumerate = app.add_subcommand("enumerate", "Unlabeled unicyclic graphs on n vertices");
  enumerate->add_option("--n", o.n, "Vertex count")->required();
  enumerate->add_option("--diameter", o.diameter, "Exact diameter");
  enumerate->add_option("--girth", o.girth, "Exact girth");
  enumerate->add_flag("--count-only", o.count_only, "Print only the number of classes");
  enumerate->add_option("--out", o.out_path, "graph6 output file (stdout if omitted)");
  enumerate->add_option("--max-n", o.max_n, "Override the enumeration cap");
  enumerate->add_option("--jobs", o.jobs, "Worker threads (0: all cores)");

  auto* transform = app.add_subcommand("transform", "Apply a relocation or an edge swap");
  transform->add_option("--in", o.in_path, "Input file (first graph is used)")->required();
  auto* reloc = transform->add_option("--relocate", o.relocate_pair, "u,v: move v's branches onto u");
  auto* swap = transform->add_option("--swap", o.swap_text, "\"+a,b -c,d ...\"");
  reloc->excludes(swap);
  transform->add_option("--out", o.out_path, "Also write graph6 here");

  auto* extremal = app.add_subcommand("extremal", "Exhaustive maximisation of SO_alpha over U_{n,d}");
  extremal->add_option("--n", o.n, "Vertex count")->required();
  extremal->add_option("--d", o.d, "Diameter")->required();
  extremal->add_option("--alpha", o.alpha, "Exponent alpha in (0,1)")->required();
  extremal->add_option("--tol", o.tolerance, "Relative tie tolerance");
  extremal->add_option("--report", o.report_path, "CSV report");
  extremal->add_flag("--timing", o.timing, "Fill the seconds column of the report");
  extremal->add_option("--max-n", o.max_n, "Override the enumeration cap");
  extremal->add_option("--jobs", o.jobs, "Worker threads (0: all cores)");

  auto* lemma = app.add_subcommand("check-lemma", "Grid check of an analytic lemma");
  lemma->add_option("--id", o.lemma_id, "L1 | L5 | L6 | L7 | gpos | hpos")->required();
  lemma->add_option("--alpha-start", o.alpha_start);
  lemma->add_option("--alpha-stop", o.alpha_stop);
  lemma->add_option("--alpha-step", o.alpha_step);
  lemma->add_option("--x-start", o.x_start);
  lemma->add_option("--x-stop", o.x_stop);
  lemma->add_option("--x-step", o.x_step);
  lemma->add_option("--y-start", o.y_start);
  lemma->add_option("--y-stop", o.y_stop);
  lemma->add_option("--y-step", o.y_step);
  lemma->add_option("--report", o.report_path, "CSV report");

  auto* constant = app.add_subcommand("check-constant", "Sign scan of a proof constant");
  constant->add_option("--id", o.constant_id, "Constant name or 'all'")->required();
  constant->add_option("--alpha-max", o.alpha_max, "Upper end of the alpha scan");
  constant->add_option("--step", o.constant_step, "Alpha step");

  auto* prop = app.add_subcommand("prop-test", "Random relocations must increase SO_alpha");
  prop->add_option("--samples", o.samples, "Relocations to test");
  prop->add_option("--seed", o.seed, "RNG seed");
  prop->add_option("--alpha", o.fixed_alpha, "Fixed alpha (default: uniform on (0,1))");

  std::vector<const char*> argv{"sombor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (index->parsed()) return cmd_index(o, out);
    if (family->parsed()) return cmd_family(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (transform->parsed()) {
      if (o.relocate_pair.empty() == o.swap_text.empty()) {
        throw Error(Errc::InvalidParameters, "transform needs exactly one of --relocate, --swap");
      }
      return cmd_transform(o, out);
    }
    if (extremal->parsed()) return cmd_extremal(o, out);
    if (lemma->parsed()) return cmd_check_lemma(o, out);
    if (constant->parsed()) return cmd_check_constant(o, out);
    if (prop->parsed()) return cmd_prop_test(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sombor::cli
