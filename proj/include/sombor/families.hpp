#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/index.hpp"

namespace sombor {

/// The n-cycle on 0..n-1 in cycle order. Throws Error{TooSmall} for n < 3.
Graph cycle(std::size_t n);

/// Path v1..vd with a 4-cycle v_i u0 v_{i+2} v_{i+1} and n-d-1 pendants on v1.
///
/// Labels: v1..vd -> 0..d-1, u0 -> d, pendants -> d+1..n-1 (all on vertex 0).
/// Requires d >= 3, n >= d+2, 1 <= i <= d-2; otherwise Error{InvalidParameters}.
/// The i = 1 member is the extremal graph U(n, d).
Graph u_graph(std::size_t n, std::size_t d, std::size_t i);

/// Cycle 0..p-1 with q pendants on vertex 0 and r pendants on vertex 1.
/// Pendants on 0 are labeled p..p+q-1, those on 1 follow.
/// Throws Error{TooSmall} for p < 3.
Graph c_family(std::size_t p, std::size_t q, std::size_t r);

/// Closed form of SO_alpha(U(n, d)):
///   (n-d-1)((n-d+1)^2+1)^a + 2((n-d+1)^2+4)^a + gamma,
///   gamma = 2*13^a + 10^a                  (d = 4)
///   gamma = 3*13^a + (d-5)*8^a + 5^a        (d >= 5).
/// Throws Error{InvalidParameters} for d < 4 or n < d+2.
IndexValue closed_form_u(std::size_t n, std::size_t d, Alpha alpha);

struct FamilySpec {
  enum class Kind { Cycle, U, CFamily };

  Kind kind = Kind::Cycle;
  std::vector<std::size_t> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses "C:n", "U:n,d,i" or "CF:p,q,r". Throws Error{ParseError}.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
Graph build(const FamilySpec& spec);

}  // namespace sombor
