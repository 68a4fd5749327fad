#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gridtop/complex.hpp"

namespace gridtop {

/// Facet sequence with, for each step j >= 1, the codimension-one faces of F_j lying in an earlier facet.
struct ShellingOrder {
  std::vector<Face> facets;
  std::vector<std::vector<Face>> attachments;

  static auto from_sequence(std::vector<Face> facets) -> ShellingOrder;
  /// Steps j >= 1 whose attachment is the whole boundary of F_j.
  auto full_attachment_count() const -> std::size_t;
};

struct ShellingCheck {
  bool valid = false;
  /// Zero-based position of the first facet violating the condition.
  std::optional<std::size_t> first_failure;
};

/// Pairwise test: for i < j some k < j has F_i & F_j inside F_k & F_j and |F_k & F_j| = |F_j| - 1.
/// Throws DomainError if K is not pure or the order is not a permutation of the facets.
auto check_shelling_order(const SimplicialComplex& k, const std::vector<Face>& order) -> ShellingCheck;

/// Every facet of del_K(v) is a facet of K; false when v is not a vertex of K.
auto is_shedding_vertex(const SimplicialComplex& k, int v) -> bool;

/// order_del followed by F + v for F in order_lk; throws DomainError naming the failed precondition.
auto compose_shelling(const SimplicialComplex& k, int v, const std::vector<Face>& order_del,
                      const std::vector<Face>& order_lk) -> ShellingOrder;

/// (d+1)-subsets of the simplex in lexicographic order.
auto skeleton_shelling_order(Face simplex, int d) -> ShellingOrder;
auto skeleton_shelling_order(int s, int d) -> ShellingOrder;
/// F | G ordered by (position of F, position of G); the supports must be disjoint.
auto join_shelling_order(const std::vector<Face>& o1, const std::vector<Face>& o2) -> ShellingOrder;

enum class SearchStatus { Found, NoneExists, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::NoneExists;
  std::optional<ShellingOrder> order;
};

inline constexpr std::size_t kDefaultSearchBudget = 14;

/// Exhaustive backtracking over facet orders when the facet count is within budget.
auto search_shelling_order(const SimplicialComplex& k, std::size_t budget = kDefaultSearchBudget) -> SearchResult;

/// Shelling of the k-cut complex of the 2 x n grid built by shedding b_n, then a_n, then b_{n-1},
/// with grouped lexicographic orders at the leaves. Needs n >= 3 and 3 <= k <= 2n - 3.
auto shelling_for_cut_2xn(int n, int k) -> ShellingOrder;

}  // namespace gridtop
