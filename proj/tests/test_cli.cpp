#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sombor/cli.hpp"
#include "sombor/families.hpp"
#include "sombor/graph_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = sombor::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sombor_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("family prints the closed form and the graph") {
  const Outcome r = run({"family", "--spec", "U:8,5,1", "--closed-form", "--alpha", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "118\n" + sombor::to_graph6(sombor::u_graph(8, 5, 1)) + "\n");
}

TEST_CASE("enumerate counts") {
  CHECK(run({"enumerate", "--n", "5", "--count-only"}).out == "5\n");
  CHECK(run({"enumerate", "--n", "5", "--diameter", "2", "--count-only"}).out == "2\n");
  const Outcome listed = run({"enumerate", "--n", "4"});
  CHECK(listed.code == 0);
  CHECK(std::count(listed.out.begin(), listed.out.end(), '\n') == 2);
  CHECK(run({"enumerate", "--n", "15"}).code == 2);
}

TEST_CASE("extremal exit codes and reports") {
  const Outcome ok = run({"extremal", "--n", "7", "--d", "3", "--alpha", "0.5"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verdict=ConfirmedUnique") != std::string::npos);

  const Outcome tied = run({"extremal", "--n", "7", "--d", "3", "--alpha", "0.5", "--tol", "1"});
  CHECK(tied.code == 1);
  CHECK(tied.out.find("verdict=ConfirmedTied") != std::string::npos);

  const fs::path a = scratch("ext_a.csv");
  const fs::path b = scratch("ext_b.csv");
  CHECK(run({"extremal", "--n", "8", "--d", "4", "--alpha", "0.25", "--report", a.string(), "--jobs", "1"}).code == 0);
  CHECK(run({"extremal", "--n", "8", "--d", "4", "--alpha", "0.25", "--report", b.string(), "--jobs", "3"}).code == 0);
  const std::string report = slurp(a);
  CHECK(report == slurp(b));
  CHECK(report.rfind("n,d,alpha,max_value,argmax_g6,predicted_g6,verdict,seconds\n", 0) == 0);
  CHECK(report.find(",ConfirmedUnique,\n") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"index", "--alpha", "0.5"}).code == 2);
  CHECK(run({"family", "--spec", "U:9,5,4"}).code == 2);
  CHECK(run({"family", "--spec", "Q:3"}).code == 2);
  CHECK(run({"extremal", "--n", "7", "--d", "3", "--alpha", "1.5"}).code == 2);
  CHECK(run({"check-constant", "--id", "nope"}).code == 2);
  CHECK(run({"check-constant", "--id", "subcase22", "--alpha-max", "2"}).code == 2);
  CHECK(run({"index", "--in", scratch("missing.g6").string(), "--alpha", "0.5"}).code == 2);
  CHECK(run({"transform", "--in", "x", "--relocate", "0,1", "--swap", "+0,1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("family --out then index --in round-trips") {
  const fs::path p = scratch("c_family.g6");
  const Outcome built = run({"family", "--spec", "CF:4,3,2", "--out", p.string()});
  REQUIRE(built.code == 0);
  const Outcome idx = run({"index", "--in", p.string(), "--alpha", "0.3"});
  REQUIRE(idx.code == 0);
  const double expected = sombor::general_sombor(sombor::c_family(4, 3, 2), sombor::Alpha(0.3));
  CHECK(std::abs(std::stod(idx.out) - expected) <= 1e-12 * expected);

  const fs::path edges = scratch("path.txt");
  std::ofstream(edges) << "3 2\n0 1\n1 2\n";
  CHECK(run({"index", "--in", edges.string(), "--alpha", "1"}).out == "10\n");
}

TEST_CASE("transform") {
  const fs::path p = scratch("c6.g6");
  std::ofstream(p) << sombor::to_graph6(sombor::cycle(6)) << '\n';
  const Outcome reloc = run({"transform", "--in", p.string(), "--relocate", "0,5"});
  CHECK(reloc.code == 0);
  const sombor::Graph expected = sombor::Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
  CHECK(reloc.out == sombor::to_graph6(expected) + "\n");
  CHECK(run({"transform", "--in", p.string(), "--relocate", "0,2"}).code == 2);

  const Outcome swapped = run({"transform", "--in", p.string(), "--swap", "+0,3 -0,1"});
  CHECK(swapped.code == 0);
  CHECK(run({"transform", "--in", p.string(), "--swap", "+0,1"}).code == 2);
}

TEST_CASE("check-lemma and check-constant") {
  const fs::path p = scratch("l5.csv");
  const Outcome r = run({"check-lemma", "--id", "L5", "--x-stop", "5", "--report", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations=0") != std::string::npos);
  const std::string csv = slurp(p);
  CHECK(csv.rfind("lemma,alpha,x,y,value,status\n", 0) == 0);
  CHECK(csv.find(",tightest\n") != std::string::npos);
  CHECK(run({"check-lemma", "--id", "L5", "--y-stop", "3"}).code == 2);

  const Outcome c = run({"check-constant", "--id", "all"});
  CHECK(c.code == 0);
  CHECK(c.out.find("FAIL") == std::string::npos);
  CHECK(c.out.find("subcase22") != std::string::npos);
}

TEST_CASE("prop-test") {
  const Outcome r = run({"prop-test", "--samples", "200", "--seed", "42"});
  CHECK(r.code == 0);
  CHECK(r.out.find("tested=200") != std::string::npos);
  CHECK(r.out.find("counterexamples=0") != std::string::npos);
  CHECK(run({"prop-test", "--samples", "200", "--seed", "42"}).out == r.out);
}

TEST_CASE("format_real") {
  CHECK(sombor::cli::format_real(118.0) == "118");
  CHECK(sombor::cli::format_real(0.1) == "0.1");
  CHECK(std::stod(sombor::cli::format_real(std::sqrt(2.0))) == std::sqrt(2.0));
}
