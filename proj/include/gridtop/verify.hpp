#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gridtop/complex.hpp"

namespace gridtop {

struct VerificationCase {
  std::string id;
  std::vector<std::pair<std::string, long long>> params;
  std::string expected;
  std::string observed;
  /// Closed form or oracle the expectation comes from; a case without one never passes.
  std::string provenance;
  bool pass = false;
};

using CaseList = std::vector<VerificationCase>;

struct VerifyOptions {
  /// Overrides every sweep bound when positive.
  int n_max = 0;
  EnumerationLimits limits;
  std::uint64_t seed = 20240611;
};

/// Total k-cut Betti numbers of the 2 x n grid for 2 <= k <= n <= n_max.
auto verify_betti_2xn(int n_max, const std::vector<int>& primes, EnumerationLimits limits = {}) -> CaseList;
/// Total 3-cut Betti numbers of the 3 x n grid (2 <= n <= n_max) and of G3xn' (2 <= m <= m_max).
auto verify_betti_3xn(int n_max, int m_max, const std::vector<int>& primes, EnumerationLimits limits = {})
    -> CaseList;
/// Star-cover identities and the K_i / L_i decompositions as exact complex equalities.
auto verify_decompositions(const std::vector<std::pair<int, int>>& grid2_mk, const std::vector<int>& grid3_m,
                           int del_n_max, EnumerationLimits limits = {}) -> CaseList;
auto verify_shelling_2xn(int n_max) -> CaseList;
auto verify_shedding_lemmas(int n_max) -> CaseList;
auto verify_appendix(int m_min, int m_max, EnumerationLimits limits = {}) -> CaseList;
auto hockey_stick_check(int n_max) -> CaseList;
/// Randomised and per-family lemma checks against independent constructions.
auto verify_properties(std::uint64_t seed, int random_graphs = 200, int link_graphs = 20, int family_n_max = 5,
                       EnumerationLimits limits = {}) -> CaseList;

/// Claim groups accepted by run_claims, in report order.
auto claim_names() -> std::vector<std::string>;
/// Runs a group by name, a single case id, or "all". Throws DomainError for unknown names.
auto run_claims(const std::string& name, const VerifyOptions& options) -> CaseList;

auto all_pass(const CaseList& cases) -> bool;
void write_cases_json(std::ostream& out, const CaseList& cases);
void write_cases_csv(std::ostream& out, const CaseList& cases);
void write_cases_table(std::ostream& out, const CaseList& cases);

/// Command-line entry point; returns 0 pass, 1 fail, 2 usage, 3 capacity.
auto run_cli(int argc, const char* const* argv) -> int;

}  // namespace gridtop
