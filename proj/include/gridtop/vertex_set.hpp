#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace gridtop {

inline constexpr int kMaxVertices = 64;

/// A set of vertex indices in [0, 64), stored as a bitset.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr auto operator*() const -> int { return std::countr_zero(rest_); }
    constexpr auto operator++() -> iterator& {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr auto operator++(int) -> iterator {
      auto old = *this;
      ++*this;
      return old;
    }
    constexpr auto operator==(const iterator&) const -> bool = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) bits_ |= std::uint64_t{1} << v;
  }

  static constexpr auto single(int v) -> VertexSet { return VertexSet(std::uint64_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr auto range(int n) -> VertexSet {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  template <typename It>
  static auto from(It first, It last) -> VertexSet {
    VertexSet s;
    for (; first != last; ++first) s.insert(*first);
    return s;
  }

  constexpr auto bits() const -> std::uint64_t { return bits_; }
  constexpr auto size() const -> int { return std::popcount(bits_); }
  constexpr auto empty() const -> bool { return bits_ == 0; }
  /// Dimension of the face, -1 for the empty face.
  constexpr auto dim() const -> int { return size() - 1; }

  constexpr auto contains(int v) const -> bool { return (bits_ >> v) & 1U; }
  constexpr auto contains(VertexSet s) const -> bool { return (s.bits_ & ~bits_) == 0; }
  constexpr auto subset_of(VertexSet s) const -> bool { return s.contains(*this); }
  constexpr auto intersects(VertexSet s) const -> bool { return (bits_ & s.bits_) != 0; }

  constexpr auto with(int v) const -> VertexSet { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr auto without(int v) const -> VertexSet { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr auto min() const -> int { return std::countr_zero(bits_); }
  constexpr auto max() const -> int { return 63 - std::countl_zero(bits_); }

  constexpr auto begin() const -> iterator { return iterator{bits_}; }
  constexpr auto end() const -> iterator { return iterator{0}; }

  auto elements() const -> std::vector<int> { return {begin(), end()}; }

  constexpr auto operator|=(VertexSet o) -> VertexSet& {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr auto operator&=(VertexSet o) -> VertexSet& {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr auto operator-=(VertexSet o) -> VertexSet& {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr auto operator|(VertexSet a, VertexSet b) -> VertexSet { return a |= b; }
  friend constexpr auto operator&(VertexSet a, VertexSet b) -> VertexSet { return a &= b; }
  friend constexpr auto operator-(VertexSet a, VertexSet b) -> VertexSet { return a -= b; }
  friend constexpr auto operator==(VertexSet, VertexSet) -> bool = default;
  /// Orders by bitset value.
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) -> std::strong_ordering {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

using Face = VertexSet;

/// Lexicographic order on the increasing vertex sequences of a and b.
constexpr auto lex_less(VertexSet a, VertexSet b) -> bool {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

/// True iff pred holds for some k-subset of s; subsets are visited in lexicographic order.
template <typename P>
auto any_subset_of_size(VertexSet s, int k, P&& pred) -> bool {
  const auto elems = s.elements();
  const int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet sub;
    for (int i : idx) sub.insert(elems[i]);
    if (pred(sub)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls f on every k-subset of s, in lexicographic order.
template <typename F>
void for_each_subset_of_size(VertexSet s, int k, F&& f) {
  any_subset_of_size(s, k, [&f](VertexSet sub) {
    f(sub);
    return false;
  });
}

}  // namespace gridtop

template <>
struct std::hash<gridtop::VertexSet> {
  auto operator()(gridtop::VertexSet s) const noexcept -> std::size_t {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
