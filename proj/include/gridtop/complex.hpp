#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridtop/vertex_set.hpp"

namespace gridtop {

/// Ordered vertex labels; index order is the global vertex order.
using Universe = std::vector<std::string>;

/// Controls full face enumeration.
struct EnumerationLimits {
  int max_universe = 22;
};

/// A simplicial complex stored by its facets. No facets means void; {empty face} is facets = [{}].
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal input faces, sorted by bitset value.
  static auto from_facets(Universe universe, std::vector<Face> faces) -> SimplicialComplex;
  static auto void_complex(Universe universe) -> SimplicialComplex;
  static auto simplex(Universe universe, Face f) -> SimplicialComplex;

  auto universe() const -> const Universe& { return universe_; }
  auto universe_size() const -> int { return static_cast<int>(universe_.size()); }
  auto facets() const -> const std::vector<Face>& { return facets_; }
  auto facet_count() const -> std::size_t { return facets_.size(); }
  auto is_void() const -> bool { return facets_.empty(); }

  auto is_face(Face s) const -> bool;
  auto is_facet(Face s) const -> bool;
  /// Union of all facets.
  auto vertices() const -> VertexSet;
  /// Throws DomainError on the void complex.
  auto dimension() const -> int;
  auto is_pure() const -> bool;

  auto label(int v) const -> const std::string& { return universe_[v]; }
  /// Throws DomainError for unknown labels.
  auto index_of(std::string_view label) const -> int;
  auto face_of(std::initializer_list<std::string_view> labels) const -> Face;
  auto face_to_string(Face f) const -> std::string;

  friend auto operator==(const SimplicialComplex&, const SimplicialComplex&) -> bool = default;

 private:
  Universe universe_;
  std::vector<Face> facets_;
};

/// Inclusion-maximal elements of `faces`, sorted by bitset value.
auto maximal_faces(std::vector<Face> faces) -> std::vector<Face>;

/// Throws DomainError if s is not a face.
auto link(const SimplicialComplex& k, Face s) -> SimplicialComplex;
auto delete_face(const SimplicialComplex& k, Face s) -> SimplicialComplex;
auto delete_vertex(const SimplicialComplex& k, int v) -> SimplicialComplex;
auto star(const SimplicialComplex& k, Face s) -> SimplicialComplex;

/// Appends a fresh apex vertex.
auto cone(const SimplicialComplex& k, const std::string& apex) -> SimplicialComplex;
/// Appends two fresh apexes.
auto suspension(const SimplicialComplex& k, const std::string& north = "N", const std::string& south = "S")
    -> SimplicialComplex;
/// Join over disjoint universes; the result universe is the concatenation.
auto join(const SimplicialComplex& k1, const SimplicialComplex& k2) -> SimplicialComplex;
/// Join of two complexes on one universe whose vertex supports are disjoint.
auto internal_join(const SimplicialComplex& k1, const SimplicialComplex& k2) -> SimplicialComplex;
auto skeleton(const SimplicialComplex& k, int d) -> SimplicialComplex;
auto intersect(const SimplicialComplex& k1, const SimplicialComplex& k2) -> SimplicialComplex;
auto unite(const SimplicialComplex& k1, const SimplicialComplex& k2) -> SimplicialComplex;
auto unite(std::span<const SimplicialComplex> parts) -> SimplicialComplex;
auto equals(const SimplicialComplex& k1, const SimplicialComplex& k2) -> bool;
auto is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& k) -> bool;
/// Relabels vertex v as perm[v]; perm must be a permutation of the universe indices.
auto permute(const SimplicialComplex& k, std::span<const int> perm) -> SimplicialComplex;

/// faces[d + 1] lists the d-dimensional faces in increasing bitset order; the void complex gives {}.
auto all_faces_by_dim(const SimplicialComplex& k, EnumerationLimits limits = {}) -> std::vector<std::vector<Face>>;
/// f-vector (f_{-1}, f_0, f_1, ...).
auto census(const SimplicialComplex& k, EnumerationLimits limits = {}) -> std::vector<std::size_t>;

}  // namespace gridtop
