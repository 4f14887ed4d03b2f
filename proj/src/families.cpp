#include "sombor/families.hpp"

#include <charconv>
#include <cmath>

#include "sombor/error.hpp"

namespace sombor {

namespace {

std::string params_text(std::initializer_list<std::size_t> values) {
  std::string out;
  for (std::size_t v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

Graph cycle(std::size_t n) {
  if (n < 3) throw Error(Errc::TooSmall, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edge_list(n, edges);
}

Graph u_graph(std::size_t n, std::size_t d, std::size_t i) {
  if (d < 3 || n < d + 2 || i < 1 || i + 2 > d) {
    throw Error(Errc::InvalidParameters, "U(n,d,i) needs d >= 3, n >= d+2, 1 <= i <= d-2; got (" +
                                             params_text({n, d, i}) + ")");
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < d; ++v) edges.emplace_back(v, v + 1);
  const auto apex = static_cast<Vertex>(d);
  edges.emplace_back(static_cast<Vertex>(i - 1), apex);
  edges.emplace_back(apex, static_cast<Vertex>(i + 1));
  for (auto p = static_cast<Vertex>(d + 1); p < n; ++p) edges.emplace_back(0, p);
  return Graph::from_edge_list(n, edges);
}

Graph c_family(std::size_t p, std::size_t q, std::size_t r) {
  if (p < 3) throw Error(Errc::TooSmall, "C_d(p,q,r) needs p >= 3, got " + std::to_string(p));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < p; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % p));
  auto next = static_cast<Vertex>(p);
  for (std::size_t k = 0; k < q; ++k) edges.emplace_back(0, next++);
  for (std::size_t k = 0; k < r; ++k) edges.emplace_back(1, next++);
  return Graph::from_edge_list(p + q + r, edges);
}

IndexValue closed_form_u(std::size_t n, std::size_t d, Alpha alpha) {
  if (d < 4 || n < d + 2) {
    throw Error(Errc::InvalidParameters, "closed form covers d >= 4, n >= d+2; got (" + params_text({n, d}) + ")");
  }
  const double a = alpha.value();
  const double hub = static_cast<double>(n - d + 1);
  const double pendants = static_cast<double>(n - d - 1);
  const double gamma = d == 4 ? 2.0 * std::pow(13.0, a) + std::pow(10.0, a)
                              : 3.0 * std::pow(13.0, a) + static_cast<double>(d - 5) * std::pow(8.0, a) +
                                    std::pow(5.0, a);
  return pendants * std::pow(hub * hub + 1.0, a) + 2.0 * std::pow(hub * hub + 4.0, a) + gamma;
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(Errc::ParseError, "family spec must look like C:n, U:n,d,i or CF:p,q,r");
  }
  const std::string_view tag = text.substr(0, colon);
  FamilySpec spec;
  std::size_t arity = 0;
  if (tag == "C") {
    spec.kind = FamilySpec::Kind::Cycle;
    arity = 1;
  } else if (tag == "U") {
    spec.kind = FamilySpec::Kind::U;
    arity = 3;
  } else if (tag == "CF") {
    spec.kind = FamilySpec::Kind::CFamily;
    arity = 3;
  } else {
    throw Error(Errc::ParseError, "unknown family '" + std::string(tag) + "'");
  }

  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(Errc::ParseError, "bad family parameter '" + std::string(token) + "'");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (spec.params.size() != arity) {
    throw Error(Errc::ParseError, std::string(tag) + " takes " + std::to_string(arity) + " parameter(s)");
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out;
  switch (spec.kind) {
    case FamilySpec::Kind::Cycle: out = "C:"; break;
    case FamilySpec::Kind::U: out = "U:"; break;
    case FamilySpec::Kind::CFamily: out = "CF:"; break;
  }
  for (std::size_t k = 0; k < spec.params.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(spec.params[k]);
  }
  return out;
}

Graph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilySpec::Kind::Cycle: return cycle(p.at(0));
    case FamilySpec::Kind::U: return u_graph(p.at(0), p.at(1), p.at(2));
    case FamilySpec::Kind::CFamily: return c_family(p.at(0), p.at(1), p.at(2));
  }
  throw Error(Errc::InvalidParameters, "unknown family kind");
}

}  // namespace sombor
