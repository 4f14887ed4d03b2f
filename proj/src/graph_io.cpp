#include "sombor/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "sombor/error.hpp"

namespace sombor {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::size_t kSmallLimit = 62;
constexpr std::size_t kMediumLimit = 258047;

void append_size(std::string& out, std::size_t n) {
  if (n <= kSmallLimit) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= kMediumLimit) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

std::size_t sextet(char c) {
  if (c < 63 || c > 126) throw Error(Errc::ParseError, std::string("invalid graph6 character '") + c + "'");
  return static_cast<std::size_t>(c - 63);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);

  int filled = 0;
  unsigned acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::ParseError, "empty graph6 string");

  std::size_t pos = 0;
  std::size_t n = 0;
  auto read_wide = [&](int count) {
    if (pos + count > text.size()) throw Error(Errc::ParseError, "truncated graph6 size header");
    std::size_t value = 0;
    for (int k = 0; k < count; ++k) value = (value << 6) | sextet(text[pos++]);
    return value;
  };
  if (text[0] != 126) {
    n = sextet(text[pos++]);
  } else if (text.size() > 1 && text[1] == 126) {
    pos = 2;
    n = read_wide(6);
  } else {
    pos = 1;
    n = read_wide(3);
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw Error(Errc::ParseError, "graph6 body has " + std::to_string(text.size() - pos) +
                                      " bytes, expected " + std::to_string(bytes));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bytes > 0 && bits % 6 != 0) {
    std::size_t last = sextet(text.back());
    if (last & ((1u << (6 - bits % 6)) - 1)) throw Error(Errc::ParseError, "nonzero graph6 padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(Errc::ParseError, "edge list must start with \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) throw Error(Errc::ParseError, "expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0) throw Error(Errc::OutOfRange, "negative vertex label");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (in >> trailing) throw Error(Errc::ParseError, "unexpected trailing token '" + trailing + "'");
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

std::vector<Graph> read_graphs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  std::istringstream lines(content);
  std::string line;
  std::vector<Graph> graphs;
  bool first = true;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (first && line.find_first_of(" \t") != std::string::npos) {
      std::istringstream all(content);
      graphs.push_back(parse_edge_list(all));
      return graphs;
    }
    first = false;
    graphs.push_back(from_graph6(line));
  }
  return graphs;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace sombor
