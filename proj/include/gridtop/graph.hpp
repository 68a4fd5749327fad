#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridtop/vertex_set.hpp"

namespace gridtop {

/// Simple undirected graph on at most 64 labeled vertices.
class Graph {
 public:
  Graph() = default;
  /// Throws DomainError on self-loops, bad endpoints or duplicate labels.
  Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);

  auto size() const -> int { return static_cast<int>(labels_.size()); }
  auto vertices() const -> VertexSet { return VertexSet::range(size()); }
  auto neighbors(int v) const -> VertexSet { return adj_[v]; }
  auto adjacent(int u, int v) const -> bool { return adj_[u].contains(v); }
  auto degree(int v) const -> int { return adj_[v].size(); }
  auto edge_count() const -> std::size_t;
  /// Edges (u, v) with u < v, sorted.
  auto edges() const -> std::vector<std::pair<int, int>>;

  auto label(int v) const -> const std::string& { return labels_[v]; }
  auto labels() const -> const std::vector<std::string>& { return labels_; }
  auto find(std::string_view label) const -> std::optional<int>;
  /// Throws DomainError for unknown labels.
  auto index_of(std::string_view label) const -> int;
  auto set_of(std::initializer_list<std::string_view> labels) const -> VertexSet;

  friend auto operator==(const Graph&, const Graph&) -> bool = default;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> adj_;
};

/// Label of the vertex in row r (0-based, rendered a, b, c, ...) and column c (1-based).
auto grid_label(int row, int col) -> std::string;

/// The m x n grid; vertex (r, c) has index m*(c-1) + r.
auto make_grid(int m, int n) -> Graph;

auto induced_subgraph(const Graph& g, VertexSet s) -> Graph;
/// G with the vertices of s removed.
auto delete_vertices(const Graph& g, VertexSet s) -> Graph;

auto is_independent(const Graph& g, VertexSet s) -> bool;
/// Size-k independent sets in increasing bitset order.
auto enumerate_independent_sets(const Graph& g, int k) -> std::vector<VertexSet>;
/// Independent k-subsets of `within`, in increasing bitset order.
auto enumerate_independent_sets(const Graph& g, VertexSet within, int k) -> std::vector<VertexSet>;
auto has_independent_subset(const Graph& g, VertexSet within, int k) -> bool;

/// Throws DomainError for the empty set.
auto is_connected_subset(const Graph& g, VertexSet s) -> bool;

auto is_simplicial_vertex(const Graph& g, int v) -> bool;
auto is_leaf(const Graph& g, int v) -> bool;

auto to_dot(const Graph& g, std::string_view name = "G") -> std::string;

}  // namespace gridtop
