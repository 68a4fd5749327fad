#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gridtop/complex.hpp"

namespace gridtop {

/// Sparse F_p column: (row, value) pairs sorted by row, values in [1, p).
using SparseColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Augmented boundary map from d-faces to (d-1)-faces; faces of each dimension are ordered by bitset value.
struct BoundaryMatrix {
  int dim = 0;
  int prime = 2;
  std::size_t rows = 0;
  std::vector<SparseColumn> columns;
};

/// Reduced Betti numbers over F_prime; values[d + 1] is b_d for d >= -1.
struct BettiProfile {
  int prime = 2;
  std::vector<long long> values;

  /// b_d, zero outside the stored range.
  auto operator[](int d) const -> long long {
    return d + 1 >= 0 && d + 1 < static_cast<int>(values.size()) ? values[d + 1] : 0;
  }
  /// Same Betti numbers, ignoring the prime and trailing zeros.
  auto same_numbers(const BettiProfile& o) const -> bool;
};

struct WedgeProfile {
  long long count = 0;
  std::optional<int> dim;

  friend auto operator==(const WedgeProfile&, const WedgeProfile&) -> bool = default;
};

auto is_prime(int p) -> bool;

/// Throws DomainError on the void complex or a non-prime, CapacityError past the cap.
auto boundary_matrix(const SimplicialComplex& k, int d, int p, EnumerationLimits limits = {}) -> BoundaryMatrix;
auto rank(const BoundaryMatrix& m) -> std::size_t;
/// Product of two boundary maps is zero, checked for every consecutive pair.
auto boundary_squared_vanishes(const SimplicialComplex& k, int p, EnumerationLimits limits = {}) -> bool;

/// The void complex gives the all-zero profile.
auto reduced_betti(const SimplicialComplex& k, int p, EnumerationLimits limits = {}) -> BettiProfile;
/// Reduced Euler characteristic, the empty face counted in dimension -1.
auto euler_characteristic(const SimplicialComplex& k, EnumerationLimits limits = {}) -> long long;
auto alternating_sum(const BettiProfile& b) -> long long;
/// (N, d) when b_d = N > 0 is the only nonzero entry; (0, none) when all vanish.
auto wedge_profile(const BettiProfile& b) -> std::optional<WedgeProfile>;

/// Betti numbers over two primes with the consistency checks applied to every run.
struct CheckedHomology {
  BettiProfile primary;
  BettiProfile secondary;
  long long euler = 0;
  bool boundary_squared_zero = false;
  bool primes_agree = false;
  bool euler_consistent = false;

  auto consistent() const -> bool { return boundary_squared_zero && primes_agree && euler_consistent; }
};

auto checked_homology(const SimplicialComplex& k, EnumerationLimits limits = {}, int p = 2, int q = 3)
    -> CheckedHomology;

}  // namespace gridtop
