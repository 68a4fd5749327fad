#pragma once

#include <optional>
#include <vector>

#include "gridtop/complex.hpp"
#include "gridtop/graph.hpp"
#include "gridtop/homology.hpp"

namespace gridtop {

struct MatchedPair {
  Face lower;
  Face upper;

  friend auto operator==(const MatchedPair&, const MatchedPair&) -> bool = default;
};

struct PartialMatching {
  std::vector<MatchedPair> pairs;
};

struct MatchingReport {
  /// critical[d + 1] holds the unmatched d-faces, sorted by bitset value.
  std::vector<std::vector<Face>> critical;
  bool acyclic = false;
  bool empty_face_matched = false;

  auto critical_count() const -> std::size_t;
  auto critical_in_dim(int d) const -> std::size_t;
  /// Sum over critical faces of (-1)^dim, the empty face counted in dimension -1.
  auto critical_euler() const -> long long;
};

struct StepResult {
  std::vector<MatchedPair> pairs;
  std::vector<Face> remaining;
};

/// Pairs sigma with sigma + v whenever both lie in `remaining` (sorted by bitset value) and v is not in sigma.
auto element_matching_step(const std::vector<Face>& remaining, int v) -> StepResult;
/// Successive element matchings; each step only sees faces untouched by earlier steps.
auto sequence_matching(const SimplicialComplex& k, const std::vector<int>& vertices, EnumerationLimits limits = {})
    -> PartialMatching;

/// Throws DomainError unless every pair is a cover relation of K and no face is used twice.
void validate_matching(const SimplicialComplex& k, const PartialMatching& m, EnumerationLimits limits = {});
/// No directed cycle in the Hasse diagram with matched edges reversed.
auto check_acyclic(const SimplicialComplex& k, const PartialMatching& m, EnumerationLimits limits = {}) -> bool;
auto matching_report(const SimplicialComplex& k, const PartialMatching& m, EnumerationLimits limits = {})
    -> MatchingReport;

/// (count, d) when all critical faces have dimension d; (0, none) when nothing is critical.
/// Throws DomainError when the matching is not acyclic.
auto morse_wedge_verdict(const MatchingReport& r) -> std::optional<WedgeProfile>;
auto morse_wedge_verdict(const SimplicialComplex& k, const PartialMatching& m, EnumerationLimits limits = {})
    -> std::optional<WedgeProfile>;

/// c_d >= b_d in every dimension.
auto weak_morse_inequalities_hold(const MatchingReport& r, const BettiProfile& b) -> bool;

enum class AppendixFamily { G3xn1, H1 };

struct AppendixRun {
  Graph graph;
  SimplicialComplex complex;
  int apex = 0;
  std::vector<int> sequence;
  PartialMatching matching;
  MatchingReport report;
  /// Unmatched faces after the apex step: complements of {apex} plus an edge, and of {apex, a}.
  std::size_t type1_after_apex = 0;
  std::size_t type2_after_apex = 0;
  /// Every complement of {apex, a} ends up paired with a complement of {apex} plus an edge.
  bool type2_matched_to_type1 = false;
};

/// Apex first, then the remaining vertices in breadth-first order from the apex's neighbour
/// (ties by increasing index). The apex must be a leaf.
auto appendix_sequence(const Graph& g, int apex) -> std::vector<int>;

/// Element matchings on the total 2-cut complex of G3xn1(m) (apex c_{m+1}) or H1(m) (apex a_m); m >= 2.
auto appendix_total2cut_matching(AppendixFamily family, int m) -> AppendixRun;
/// Same, with an explicit vertex order after the apex.
auto appendix_total2cut_matching(AppendixFamily family, int m, const std::vector<int>& after_apex) -> AppendixRun;

}  // namespace gridtop
