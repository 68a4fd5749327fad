#pragma once

#include <string>
#include <string_view>

#include "gridtop/graph.hpp"

namespace gridtop {

enum class FamilyTag { G2xn, G2xnPrime, G3xn, G3xnPrime, G3xn1, G3xn2, H1, H2, H3, GridMxN };

/// A named grid family with its size parameter; `rows` is used by GridMxN only.
struct GridFamily {
  FamilyTag tag = FamilyTag::G2xn;
  int n = 1;
  int rows = 0;

  friend auto operator==(const GridFamily&, const GridFamily&) -> bool = default;
};

/// Vertex sets (as subsets of a plain grid):
///   G2xn(n)      = G_{2xn}
///   G2xnPrime(n) = G_{2x(n+1)} minus b_{n+1}
///   G3xn(n)      = G_{3xn}
///   G3xnPrime(n) = G_{3x(n+1)} minus a_{n+1}
///   G3xn1(m)     = G_{3x(m+1)} minus a_m, b_m, a_{m+1}, b_{m+1}
///   G3xn2(m)     = G_{3xm} minus a_m, b_m
///   H1(m)        = G_{3xm} minus b_m, c_m
///   H2(m)        = H1(m-1)
///   H3(m)        = G_{3xm} minus b_{m-1}, c_{m-1}, b_m, c_m
auto make_family(const GridFamily& f) -> Graph;

/// Parses `g2xn:5`, `g2xn':4`, `g3xn:4`, `g3xn':2`, `g3xn1:3`, `g3xn2:3`, `h1:3`, `h2:3`, `h3:3`, `grid:4x5`.
auto parse_family(std::string_view text) -> GridFamily;
auto family_name(const GridFamily& f) -> std::string;

}  // namespace gridtop
