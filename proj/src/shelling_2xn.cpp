#include <algorithm>

#include "gridtop/cutgen.hpp"
#include "gridtop/error.hpp"
#include "gridtop/shelling.hpp"

namespace gridtop {

namespace {

constexpr auto col_a(int i) -> int { return 2 * (i - 1); }
constexpr auto col_b(int i) -> int { return 2 * i - 1; }
constexpr auto column_of(int v) -> int { return v / 2 + 1; }

constexpr std::size_t kBaseSearchBudget = 20;

auto lex_sorted(std::vector<Face> faces) -> std::vector<Face> {
  std::sort(faces.begin(), faces.end(), lex_less);
  return faces;
}

/// Facets containing v in lexicographic order, then the rest in lexicographic order.
auto containing_first(const SimplicialComplex& k, int v) -> std::vector<Face> {
  std::vector<Face> with;
  std::vector<Face> without;
  for (Face f : k.facets()) (f.contains(v) ? with : without).push_back(f);
  auto out = lex_sorted(std::move(with));
  for (Face f : lex_sorted(std::move(without))) out.push_back(f);
  return out;
}

/// Columns from right to left by the column of max F; within a column i:
/// max b_i with second max a_i, then max b_i otherwise, then max a_i; lexicographic inside groups.
auto grouped_by_top_pair(const SimplicialComplex& k) -> std::vector<Face> {
  auto group = [](Face f) {
    const int top = f.max();
    if (top % 2 == 0) return 2;
    const Face rest = f.without(top);
    return !rest.empty() && rest.max() == top - 1 ? 0 : 1;
  };
  auto out = k.facets();
  std::sort(out.begin(), out.end(), [&group](Face x, Face y) {
    const int cx = column_of(x.max());
    const int cy = column_of(y.max());
    if (cx != cy) return cx > cy;
    const int gx = group(x);
    const int gy = group(y);
    if (gx != gy) return gx < gy;
    return lex_less(x, y);
  });
  return out;
}

auto base_order(const SimplicialComplex& k) -> std::vector<Face> {
  if (k.is_void()) return {};
  auto found = search_shelling_order(k, kBaseSearchBudget);
  if (found.status != SearchStatus::Found) throw DomainError("shelling_for_cut_2xn: base complex has no shelling within budget");
  return found.order->facets;
}

template <typename DelFn, typename LkFn>
auto shed(const SimplicialComplex& k, int v, DelFn&& on_del, LkFn&& on_lk) -> std::vector<Face> {
  if (k.is_void()) return {};
  if (!k.vertices().contains(v)) return on_del(k);
  const auto del = delete_vertex(k, v);
  const auto lk = link(k, Face::single(v));
  return compose_shelling(k, v, on_del(del), on_lk(lk)).facets;
}

struct Builder {
  int k;

  /// The k-cut complex of the first c columns.
  auto full(const SimplicialComplex& cx, int c) const -> std::vector<Face> {
    if (c < 3 || k < 3 || k > 2 * c - 3) return base_order(cx);
    return shed(
        cx, col_b(c), [&](const SimplicialComplex& del) { return deletion_of_b(del, c); },
        [&](const SimplicialComplex& lk) { return primed(lk, c - 1); });
  }

  /// The k-cut complex of the first m columns plus a_{m+1}.
  auto primed(const SimplicialComplex& cx, int m) const -> std::vector<Face> {
    return shed(
        cx, col_a(m + 1), [&](const SimplicialComplex& del) { return primed_deletion(del, m); },
        [&](const SimplicialComplex& lk) { return full(lk, m); });
  }

  auto primed_deletion(const SimplicialComplex& cx, int m) const -> std::vector<Face> {
    const int a = col_a(m);
    return shed(
        cx, col_b(m), [a](const SimplicialComplex& del) { return containing_first(del, a); },
        [a](const SimplicialComplex& lk) { return containing_first(lk, a); });
  }

  auto deletion_of_b(const SimplicialComplex& cx, int c) const -> std::vector<Face> {
    return shed(cx, col_a(c), grouped_by_top_pair, grouped_by_top_pair);
  }
};

}  // namespace

auto shelling_for_cut_2xn(int n, int k) -> ShellingOrder {
  if (n < 3 || k < 3 || k > 2 * n - 3) {
    throw DomainError("shelling_for_cut_2xn needs n >= 3 and 3 <= k <= 2n - 3");
  }
  const Graph g = make_grid(2, n);
  const auto cx = cut_complex(g, k);
  auto order = Builder{k}.full(cx, n);
  if (!check_shelling_order(cx, order).valid) throw DomainError("shelling_for_cut_2xn: constructed order fails the checker");
  return ShellingOrder::from_sequence(std::move(order));
}

}  // namespace gridtop
