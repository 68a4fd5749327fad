#include "gridtop/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "gridtop/error.hpp"

namespace gridtop {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

auto grid_minus(int m, int n, std::initializer_list<std::pair<int, int>> removed) -> Graph {
  Graph g = make_grid(m, n);
  VertexSet drop;
  for (auto [row, col] : removed) drop.insert(g.index_of(grid_label(row, col)));
  return delete_vertices(g, drop);
}

constexpr int A = 0;
constexpr int B = 1;
constexpr int C = 2;

auto parse_int(std::string_view s) -> int {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

auto make_family(const GridFamily& f) -> Graph {
  const int n = f.n;
  switch (f.tag) {
    case FamilyTag::G2xn:
      require(n >= 1, "G2xn needs n >= 1");
      return make_grid(2, n);
    case FamilyTag::G2xnPrime:
      require(n >= 1, "G2xn' needs n >= 1");
      return grid_minus(2, n + 1, {{B, n + 1}});
    case FamilyTag::G3xn:
      require(n >= 1, "G3xn needs n >= 1");
      return make_grid(3, n);
    case FamilyTag::G3xnPrime:
      require(n >= 1, "G3xn' needs n >= 1");
      return grid_minus(3, n + 1, {{A, n + 1}});
    case FamilyTag::G3xn1:
      require(n >= 1, "G3xn(1) needs m >= 1");
      return grid_minus(3, n + 1, {{A, n}, {B, n}, {A, n + 1}, {B, n + 1}});
    case FamilyTag::G3xn2:
      require(n >= 1, "G3xn(2) needs m >= 1");
      return grid_minus(3, n, {{A, n}, {B, n}});
    case FamilyTag::H1:
      require(n >= 1, "H1 needs m >= 1");
      return grid_minus(3, n, {{B, n}, {C, n}});
    case FamilyTag::H2:
      require(n >= 2, "H2 needs m >= 2");
      return grid_minus(3, n - 1, {{B, n - 1}, {C, n - 1}});
    case FamilyTag::H3:
      require(n >= 2, "H3 needs m >= 2");
      return grid_minus(3, n, {{B, n - 1}, {C, n - 1}, {B, n}, {C, n}});
    case FamilyTag::GridMxN:
      require(n >= 1 && f.rows >= 1, "grid needs positive dimensions");
      return make_grid(f.rows, n);
  }
  throw DomainError("unknown family");
}

auto parse_family(std::string_view text) -> GridFamily {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec needs the form name:size");
  std::string name(text.substr(0, colon));
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::tolower(ch); });
  const auto arg = text.substr(colon + 1);
  if (name == "grid") {
    const auto x = arg.find('x');
    if (x == std::string_view::npos) throw ParseError("grid spec needs the form grid:MxN");
    return {FamilyTag::GridMxN, parse_int(arg.substr(x + 1)), parse_int(arg.substr(0, x))};
  }
  static const std::pair<const char*, FamilyTag> names[] = {
      {"g2xn", FamilyTag::G2xn},   {"g2xn'", FamilyTag::G2xnPrime}, {"g3xn", FamilyTag::G3xn},
      {"g3xn'", FamilyTag::G3xnPrime}, {"g3xn1", FamilyTag::G3xn1}, {"g3xn2", FamilyTag::G3xn2},
      {"h1", FamilyTag::H1},       {"h2", FamilyTag::H2},           {"h3", FamilyTag::H3},
  };
  for (auto [key, tag] : names) {
    if (name == key) return {tag, parse_int(arg), 0};
  }
  throw ParseError("unknown family '" + name + "'");
}

auto family_name(const GridFamily& f) -> std::string {
  const auto n = std::to_string(f.n);
  switch (f.tag) {
    case FamilyTag::G2xn: return "g2xn:" + n;
    case FamilyTag::G2xnPrime: return "g2xn':" + n;
    case FamilyTag::G3xn: return "g3xn:" + n;
    case FamilyTag::G3xnPrime: return "g3xn':" + n;
    case FamilyTag::G3xn1: return "g3xn1:" + n;
    case FamilyTag::G3xn2: return "g3xn2:" + n;
    case FamilyTag::H1: return "h1:" + n;
    case FamilyTag::H2: return "h2:" + n;
    case FamilyTag::H3: return "h3:" + n;
    case FamilyTag::GridMxN: return "grid:" + std::to_string(f.rows) + "x" + n;
  }
  return "?";
}

}  // namespace gridtop
