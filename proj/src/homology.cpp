#include "gridtop/homology.hpp"

#include <algorithm>
#include <map>

#include "gridtop/error.hpp"

namespace gridtop {

namespace {

using Faces = std::vector<std::vector<Face>>;

auto inverse_mod(std::uint64_t a, std::uint64_t p) -> std::uint64_t {
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1U) result = result * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return result;
}

void check_prime(int p) {
  if (!is_prime(p) || p > 46337) throw DomainError("coefficient field needs a prime below 46337, got " + std::to_string(p));
}

/// Boundary of size-s faces, s >= 1; rows are the size-(s-1) faces.
auto build(const Faces& faces, int s, int p) -> BoundaryMatrix {
  BoundaryMatrix m;
  m.dim = s - 1;
  m.prime = p;
  const auto& rows = faces[s - 1];
  m.rows = rows.size();
  const auto& cols = faces[s];
  m.columns.reserve(cols.size());
  const auto minus_one = static_cast<std::uint32_t>(p - 1);
  for (Face f : cols) {
    SparseColumn col;
    col.reserve(f.size());
    int i = 0;
    for (int v : f) {
      const auto it = std::lower_bound(rows.begin(), rows.end(), f.without(v));
      col.emplace_back(static_cast<std::uint32_t>(it - rows.begin()), i % 2 == 0 ? 1U : minus_one);
      ++i;
    }
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  return m;
}

/// target -= factor * source, both sorted by row.
void axpy(SparseColumn& target, const SparseColumn& source, std::uint64_t factor, std::uint64_t p) {
  SparseColumn out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, static_cast<std::uint32_t>((p - factor * b->second % p) % p));
      ++b;
    } else {
      const std::uint64_t v = (a->second + p - factor * b->second % p) % p;
      if (v != 0) out.emplace_back(a->first, static_cast<std::uint32_t>(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

auto rank_of(const BoundaryMatrix& m) -> std::size_t {
  const std::uint64_t p = static_cast<std::uint64_t>(m.prime);
  std::vector<int> owner(m.rows, -1);
  std::vector<SparseColumn> reduced(m.columns.size());
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    SparseColumn col = m.columns[j];
    while (!col.empty()) {
      const auto [low, value] = col.back();
      const int o = owner[low];
      if (o < 0) {
        owner[low] = static_cast<int>(j);
        ++r;
        break;
      }
      const auto& pivot = reduced[o];
      const std::uint64_t factor = value * inverse_mod(pivot.back().second, p) % p;
      axpy(col, pivot, factor, p);
    }
    reduced[j] = std::move(col);
  }
  return r;
}

auto face_levels(const SimplicialComplex& k, EnumerationLimits limits) -> Faces {
  if (k.is_void()) throw DomainError("boundary matrices of the void complex are undefined");
  return all_faces_by_dim(k, limits);
}

auto boundary_product_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper) -> bool {
  const std::uint64_t p = static_cast<std::uint64_t>(upper.prime);
  for (const auto& col : upper.columns) {
    std::map<std::uint32_t, std::uint64_t> acc;
    for (auto [row, value] : col) {
      for (auto [r2, v2] : lower.columns[row]) acc[r2] = (acc[r2] + value * v2) % p;
    }
    for (auto [row, value] : acc) {
      if (value != 0) return false;
    }
  }
  return true;
}

}  // namespace

auto BettiProfile::same_numbers(const BettiProfile& o) const -> bool {
  const int n = static_cast<int>(std::max(values.size(), o.values.size()));
  for (int d = -1; d + 1 < n; ++d) {
    if ((*this)[d] != o[d]) return false;
  }
  return true;
}

auto is_prime(int p) -> bool {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

auto boundary_matrix(const SimplicialComplex& k, int d, int p, EnumerationLimits limits) -> BoundaryMatrix {
  check_prime(p);
  const Faces faces = face_levels(k, limits);
  if (d < 0) throw DomainError("boundary maps start in dimension 0");
  if (d + 1 >= static_cast<int>(faces.size())) {
    BoundaryMatrix empty;
    empty.dim = d;
    empty.prime = p;
    empty.rows = d < static_cast<int>(faces.size()) ? faces[d].size() : 0;
    return empty;
  }
  return build(faces, d + 1, p);
}

auto rank(const BoundaryMatrix& m) -> std::size_t { return rank_of(m); }

auto boundary_squared_vanishes(const SimplicialComplex& k, int p, EnumerationLimits limits) -> bool {
  check_prime(p);
  if (k.is_void()) return true;
  const Faces faces = face_levels(k, limits);
  const int top = static_cast<int>(faces.size()) - 1;
  for (int s = 2; s <= top; ++s) {
    if (!boundary_product_zero(build(faces, s - 1, p), build(faces, s, p))) return false;
  }
  return true;
}

auto reduced_betti(const SimplicialComplex& k, int p, EnumerationLimits limits) -> BettiProfile {
  check_prime(p);
  BettiProfile out;
  out.prime = p;
  if (k.is_void()) return out;
  const Faces faces = face_levels(k, limits);
  const int levels = static_cast<int>(faces.size());
  std::vector<long long> ranks(levels + 1, 0);
  for (int s = 1; s < levels; ++s) ranks[s] = static_cast<long long>(rank_of(build(faces, s, p)));
  out.values.resize(levels);
  for (int s = 0; s < levels; ++s) {
    out.values[s] = static_cast<long long>(faces[s].size()) - ranks[s] - ranks[s + 1];
  }
  return out;
}

auto euler_characteristic(const SimplicialComplex& k, EnumerationLimits limits) -> long long {
  long long chi = 0;
  const auto f = census(k, limits);
  for (std::size_t s = 0; s < f.size(); ++s) chi += (s % 2 == 0 ? -1 : 1) * static_cast<long long>(f[s]);
  return chi;
}

auto alternating_sum(const BettiProfile& b) -> long long {
  long long chi = 0;
  for (std::size_t s = 0; s < b.values.size(); ++s) chi += (s % 2 == 0 ? -1 : 1) * b.values[s];
  return chi;
}

auto wedge_profile(const BettiProfile& b) -> std::optional<WedgeProfile> {
  std::optional<WedgeProfile> out = WedgeProfile{};
  for (std::size_t s = 0; s < b.values.size(); ++s) {
    if (b.values[s] == 0) continue;
    if (out->dim) return std::nullopt;
    out = WedgeProfile{b.values[s], static_cast<int>(s) - 1};
  }
  return out;
}

auto checked_homology(const SimplicialComplex& k, EnumerationLimits limits, int p, int q) -> CheckedHomology {
  CheckedHomology h;
  h.primary = reduced_betti(k, p, limits);
  h.secondary = reduced_betti(k, q, limits);
  h.euler = euler_characteristic(k, limits);
  h.boundary_squared_zero = boundary_squared_vanishes(k, p, limits) && boundary_squared_vanishes(k, q, limits);
  h.primes_agree = h.primary.same_numbers(h.secondary);
  h.euler_consistent = alternating_sum(h.primary) == (k.is_void() ? 0 : h.euler);
  return h;
}

}  // namespace gridtop
