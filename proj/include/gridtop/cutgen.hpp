#pragma once

#include "gridtop/complex.hpp"
#include "gridtop/graph.hpp"

namespace gridtop {

enum class CutKind { TotalCut, Cut };

struct CutSpec {
  Graph graph;
  int k = 1;
  CutKind kind = CutKind::TotalCut;
};

/// Facets are complements of size-k independent sets. k = 0 gives the full simplex.
auto total_cut_complex(const Graph& g, int k) -> SimplicialComplex;
/// Facets are complements of size-k sets inducing a disconnected subgraph; needs k >= 2.
auto cut_complex(const Graph& g, int k) -> SimplicialComplex;
auto build_complex(const CutSpec& spec) -> SimplicialComplex;

/// The complex of G[s] embedded in the universe of G: facets s \ I over the relevant k-sets I of s.
auto total_cut_complex_on(const Graph& g, VertexSet s, int k) -> SimplicialComplex;
auto cut_complex_on(const Graph& g, VertexSet s, int k) -> SimplicialComplex;

/// Membership by witness search in the complement.
auto is_total_cut_face(const Graph& g, int k, Face s) -> bool;
auto is_cut_face(const Graph& g, int k, Face s) -> bool;

/// The complex of G minus w in the universe of G, or void when w is not a face.
auto cut_link(const Graph& g, int k, Face w, CutKind kind) -> SimplicialComplex;

}  // namespace gridtop
