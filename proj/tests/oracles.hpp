#pragma once

// Brute-force reference implementations on raw masks and edge lists.
// Nothing here calls into the library except for converting results.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gridtop/complex.hpp"
#include "gridtop/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;
using Edges = std::vector<std::pair<int, int>>;

inline auto independent(const Edges& e, Mask s) -> bool {
  for (auto [u, v] : e) {
    if ((s >> u & 1) && (s >> v & 1)) return false;
  }
  return true;
}

/// Union-find over the edges inside s; the empty set counts as connected.
inline auto connected(int n, const Edges& e, Mask s) -> bool {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : e) {
    if ((s >> u & 1) && (s >> v & 1)) parent[find(u)] = find(v);
  }
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    if ((s >> i & 1) && find(i) == i) ++roots;
  }
  return roots <= 1;
}

inline auto subsets_of_size(int n, int k) -> std::vector<Mask> {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) == k) out.push_back(s);
  }
  return out;
}

inline auto independent_sets(int n, const Edges& e, int k) -> std::vector<Mask> {
  std::vector<Mask> out;
  for (Mask s : subsets_of_size(n, k)) {
    if (independent(e, s)) out.push_back(s);
  }
  return out;
}

/// Every face as a mask: subsets of the given facets.
inline auto faces_of(const std::vector<Mask>& facets) -> std::vector<Mask> {
  std::vector<Mask> out;
  for (Mask f : facets) {
    for (Mask s = f;; s = (s - 1) & f) {
      out.push_back(s);
      if (s == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline auto maximal(std::vector<Mask> faces) -> std::vector<Mask> {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Mask> out;
  for (Mask f : faces) {
    bool top = true;
    for (Mask g : faces) {
      if (g != f && (f & ~g) == 0) top = false;
    }
    if (top) out.push_back(f);
  }
  return out;
}

/// Faces of the total k-cut complex by definition: sigma with an independent k-set in its complement.
inline auto total_cut_faces(int n, const Edges& e, int k) -> std::vector<Mask> {
  std::vector<Mask> facets;
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask s : independent_sets(n, e, k)) facets.push_back(all & ~s);
  return faces_of(facets);
}

inline auto cut_faces(int n, const Edges& e, int k) -> std::vector<Mask> {
  std::vector<Mask> facets;
  const Mask all = (Mask{1} << n) - 1;
  for (Mask s : subsets_of_size(n, k)) {
    if (!connected(n, e, s)) facets.push_back(all & ~s);
  }
  return faces_of(facets);
}

inline auto link_faces(const std::vector<Mask>& faces, Mask w) -> std::vector<Mask> {
  std::vector<Mask> out;
  for (Mask s : faces) {
    if ((s & w) == 0 && std::binary_search(faces.begin(), faces.end(), s | w)) out.push_back(s);
  }
  return out;
}

/// Rank over F_2 of a dense 0/1 matrix stored as row masks (at most 64 columns per word block).
inline auto rank_f2(std::vector<std::vector<Mask>> rows) -> long long {
  long long r = 0;
  if (rows.empty()) return 0;
  const std::size_t words = rows.front().size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < words * 64 && next < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const Mask bit = Mask{1} << (col % 64);
    std::size_t piv = next;
    while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[next]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && (rows[i][w] & bit)) {
        for (std::size_t j = 0; j < words; ++j) rows[i][j] ^= rows[next][j];
      }
    }
    ++next;
    ++r;
  }
  return r;
}

/// Reduced F_2 Betti numbers by dense elimination; index s holds b_{s-1}.
inline auto betti_f2(const std::vector<Mask>& faces) -> std::vector<long long> {
  if (faces.empty()) return {};
  int top = 0;
  for (Mask f : faces) top = std::max(top, std::popcount(f));
  std::vector<std::vector<Mask>> by_size(top + 1);
  for (Mask f : faces) by_size[std::popcount(f)].push_back(f);
  std::vector<long long> rk(top + 2, 0);
  for (int s = 1; s <= top; ++s) {
    const auto& lower = by_size[s - 1];
    std::map<Mask, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    const std::size_t words = (lower.size() + 63) / 64;
    std::vector<std::vector<Mask>> rows;
    for (Mask f : by_size[s]) {
      std::vector<Mask> row(words, 0);
      for (Mask rest = f; rest; rest &= rest - 1) {
        const std::size_t i = index.at(f & ~(rest & -rest));
        row[i / 64] |= Mask{1} << (i % 64);
      }
      rows.push_back(std::move(row));
    }
    rk[s] = rank_f2(std::move(rows));
  }
  std::vector<long long> b(top + 1);
  for (int s = 0; s <= top; ++s) b[s] = static_cast<long long>(by_size[s].size()) - rk[s] - rk[s + 1];
  return b;
}

inline auto reduced_euler(const std::vector<Mask>& faces) -> long long {
  long long chi = 0;
  for (Mask f : faces) chi += std::popcount(f) % 2 == 0 ? -1 : 1;
  return chi;
}

/// Shelling by the textbook definition: each new facet meets the earlier ones in a pure
/// codimension-one subcomplex.
inline auto is_shelling(const std::vector<Mask>& order) -> bool {
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::vector<Mask> meets;
    for (std::size_t i = 0; i < j; ++i) meets.push_back(order[i] & order[j]);
    for (Mask m : maximal(meets)) {
      if (std::popcount(m) != std::popcount(order[j]) - 1) return false;
    }
  }
  return true;
}

inline auto to_masks(const std::vector<gridtop::Face>& faces) -> std::vector<Mask> {
  std::vector<Mask> out;
  for (auto f : faces) out.push_back(f.bits());
  std::sort(out.begin(), out.end());
  return out;
}

inline auto face_masks(const gridtop::SimplicialComplex& k) -> std::vector<Mask> {
  return faces_of(to_masks(k.facets()));
}

inline auto random_edges(std::mt19937_64& rng, int n, double p) -> Edges {
  std::bernoulli_distribution coin(p);
  Edges e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return e;
}

inline auto make_graph(int n, const Edges& e) -> gridtop::Graph {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return gridtop::Graph(std::move(names), e);
}

/// Grid edges computed from coordinates, independent of the library's grid builder.
inline auto grid_edges(int rows, int cols) -> Edges {
  Edges e;
  auto id = [rows](int r, int c) { return rows * c + r; };
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
    }
  }
  return e;
}

}  // namespace oracle
