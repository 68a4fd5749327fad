#include "gridtop/graph.hpp"

#include <algorithm>
#include <sstream>

#include "gridtop/error.hpp"

namespace gridtop {

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)), adj_(labels_.size()) {
  if (labels_.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw CapacityError("graph has more than 64 vertices");
  }
  auto sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("duplicate vertex label");
  }
  const int n = size();
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop on vertex " + labels_[u]);
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

auto Graph::edge_count() const -> std::size_t {
  std::size_t twice = 0;
  for (auto a : adj_) twice += a.size();
  return twice / 2;
}

auto Graph::edges() const -> std::vector<std::pair<int, int>> {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

auto Graph::find(std::string_view label) const -> std::optional<int> {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

auto Graph::index_of(std::string_view label) const -> int {
  if (auto v = find(label)) return *v;
  throw DomainError("unknown vertex label '" + std::string(label) + "'");
}

auto Graph::set_of(std::initializer_list<std::string_view> labels) const -> VertexSet {
  VertexSet s;
  for (auto l : labels) s.insert(index_of(l));
  return s;
}

auto grid_label(int row, int col) -> std::string {
  return std::string(1, static_cast<char>('a' + row)) + std::to_string(col);
}

auto make_grid(int m, int n) -> Graph {
  if (m < 1 || n < 1) throw DomainError("grid dimensions must be positive");
  if (m > 26 || static_cast<long long>(m) * n > kMaxVertices) {
    throw CapacityError("grid " + std::to_string(m) + "x" + std::to_string(n) + " exceeds 64 vertices");
  }
  std::vector<std::string> labels;
  for (int c = 1; c <= n; ++c) {
    for (int r = 0; r < m; ++r) labels.push_back(grid_label(r, c));
  }
  auto id = [m](int r, int c) { return m * (c - 1) + r; };
  std::vector<std::pair<int, int>> edges;
  for (int c = 1; c <= n; ++c) {
    for (int r = 0; r < m; ++r) {
      if (r + 1 < m) edges.emplace_back(id(r, c), id(r + 1, c));
      if (c + 1 <= n) edges.emplace_back(id(r, c), id(r, c + 1));
    }
  }
  return Graph(std::move(labels), edges);
}

auto induced_subgraph(const Graph& g, VertexSet s) -> Graph {
  if (!g.vertices().contains(s)) throw DomainError("induced_subgraph: set is not inside the vertex set");
  std::vector<int> new_index(g.size(), -1);
  std::vector<std::string> labels;
  for (int v : s) {
    new_index[v] = static_cast<int>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    if (s.contains(u) && s.contains(v)) edges.emplace_back(new_index[u], new_index[v]);
  }
  return Graph(std::move(labels), edges);
}

auto delete_vertices(const Graph& g, VertexSet s) -> Graph { return induced_subgraph(g, g.vertices() - s); }

auto is_independent(const Graph& g, VertexSet s) -> bool {
  for (int v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

namespace {

template <typename F>
auto independent_search(const Graph& g, VertexSet candidates, int k, VertexSet chosen, F& emit) -> bool {
  if (k == 0) return emit(chosen);
  if (candidates.size() < k) return false;
  for (int v : candidates) {
    candidates.erase(v);
    if (independent_search(g, candidates - g.neighbors(v), k - 1, chosen.with(v), emit)) return true;
    if (candidates.size() < k) break;
  }
  return false;
}

}  // namespace

auto enumerate_independent_sets(const Graph& g, VertexSet within, int k) -> std::vector<VertexSet> {
  std::vector<VertexSet> out;
  auto emit = [&out](VertexSet s) {
    out.push_back(s);
    return false;
  };
  if (k >= 0) independent_search(g, within & g.vertices(), k, VertexSet{}, emit);
  std::sort(out.begin(), out.end());
  return out;
}

auto enumerate_independent_sets(const Graph& g, int k) -> std::vector<VertexSet> {
  return enumerate_independent_sets(g, g.vertices(), k);
}

auto has_independent_subset(const Graph& g, VertexSet within, int k) -> bool {
  auto emit = [](VertexSet) { return true; };
  return k >= 0 && independent_search(g, within & g.vertices(), k, VertexSet{}, emit);
}

auto is_connected_subset(const Graph& g, VertexSet s) -> bool {
  if (s.empty()) throw DomainError("connectivity of the empty vertex set is undefined");
  VertexSet seen = VertexSet::single(s.min());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v) & s;
    frontier = next - seen;
    seen |= frontier;
  }
  return seen == s;
}

auto is_simplicial_vertex(const Graph& g, int v) -> bool {
  if (v < 0 || v >= g.size()) throw DomainError("vertex out of range");
  const VertexSet nb = g.neighbors(v);
  for (int u : nb) {
    if (!g.neighbors(u).with(u).contains(nb)) return false;
  }
  return true;
}

auto is_leaf(const Graph& g, int v) -> bool {
  if (v < 0 || v >= g.size()) throw DomainError("vertex out of range");
  return g.degree(v) == 1;
}

auto to_dot(const Graph& g, std::string_view name) -> std::string {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.size(); ++v) out << "  \"" << g.label(v) << "\";\n";
  for (auto [u, v] : g.edges()) out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace gridtop
