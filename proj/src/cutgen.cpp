#include "gridtop/cutgen.hpp"

#include "gridtop/error.hpp"

namespace gridtop {

namespace {

void check_subset(const Graph& g, VertexSet s) {
  if (!g.vertices().contains(s)) throw DomainError("vertex set outside the graph");
}

void check_cut_k(int k) {
  if (k < 2) throw DomainError("the k-cut complex needs k >= 2");
}

}  // namespace

auto total_cut_complex_on(const Graph& g, VertexSet s, int k) -> SimplicialComplex {
  check_subset(g, s);
  if (k < 0) throw DomainError("k must be nonnegative");
  std::vector<Face> facets;
  for (VertexSet i : enumerate_independent_sets(g, s, k)) facets.push_back(s - i);
  return SimplicialComplex::from_facets(g.labels(), std::move(facets));
}

auto cut_complex_on(const Graph& g, VertexSet s, int k) -> SimplicialComplex {
  check_subset(g, s);
  check_cut_k(k);
  std::vector<Face> facets;
  for_each_subset_of_size(s, k, [&](VertexSet sub) {
    if (!is_connected_subset(g, sub)) facets.push_back(s - sub);
  });
  return SimplicialComplex::from_facets(g.labels(), std::move(facets));
}

auto total_cut_complex(const Graph& g, int k) -> SimplicialComplex { return total_cut_complex_on(g, g.vertices(), k); }

auto cut_complex(const Graph& g, int k) -> SimplicialComplex { return cut_complex_on(g, g.vertices(), k); }

auto build_complex(const CutSpec& spec) -> SimplicialComplex {
  return spec.kind == CutKind::TotalCut ? total_cut_complex(spec.graph, spec.k) : cut_complex(spec.graph, spec.k);
}

auto is_total_cut_face(const Graph& g, int k, Face s) -> bool {
  check_subset(g, s);
  return has_independent_subset(g, g.vertices() - s, k);
}

auto is_cut_face(const Graph& g, int k, Face s) -> bool {
  check_subset(g, s);
  check_cut_k(k);
  return any_subset_of_size(g.vertices() - s, k, [&g](VertexSet sub) { return !is_connected_subset(g, sub); });
}

auto cut_link(const Graph& g, int k, Face w, CutKind kind) -> SimplicialComplex {
  const bool face = kind == CutKind::TotalCut ? is_total_cut_face(g, k, w) : is_cut_face(g, k, w);
  if (!face) return SimplicialComplex::void_complex(g.labels());
  const VertexSet rest = g.vertices() - w;
  return kind == CutKind::TotalCut ? total_cut_complex_on(g, rest, k) : cut_complex_on(g, rest, k);
}

}  // namespace gridtop
