#include "gridtop/shelling.hpp"

#include <algorithm>

#include "gridtop/error.hpp"

namespace gridtop {

namespace {

/// Vertices v of f such that f - v lies in one of the earlier facets.
auto attached_vertices(Face f, const Face* earlier, std::size_t count) -> VertexSet {
  VertexSet u;
  const int want = f.size() - 1;
  for (std::size_t i = 0; i < count; ++i) {
    const Face meet = earlier[i] & f;
    if (meet.size() == want) u |= f - meet;
  }
  return u;
}

auto step_ok(Face f, const Face* earlier, std::size_t count) -> bool {
  const VertexSet u = attached_vertices(f, earlier, count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!(f - earlier[i]).intersects(u)) return false;
  }
  return true;
}

void require_pure(const SimplicialComplex& k) {
  if (!k.is_pure()) throw DomainError("shellability is only checked for pure complexes");
}

}  // namespace

auto ShellingOrder::from_sequence(std::vector<Face> facets) -> ShellingOrder {
  ShellingOrder o;
  o.attachments.resize(facets.size());
  for (std::size_t j = 1; j < facets.size(); ++j) {
    const Face f = facets[j];
    for (int v : attached_vertices(f, facets.data(), j)) o.attachments[j].push_back(f.without(v));
    std::sort(o.attachments[j].begin(), o.attachments[j].end());
  }
  o.facets = std::move(facets);
  return o;
}

auto ShellingOrder::full_attachment_count() const -> std::size_t {
  std::size_t n = 0;
  for (std::size_t j = 1; j < facets.size(); ++j) {
    if (static_cast<int>(attachments[j].size()) == facets[j].size()) ++n;
  }
  return n;
}

auto check_shelling_order(const SimplicialComplex& k, const std::vector<Face>& order) -> ShellingCheck {
  require_pure(k);
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != k.facets()) throw DomainError("order does not list exactly the facets of the complex");
  for (std::size_t j = 1; j < order.size(); ++j) {
    if (!step_ok(order[j], order.data(), j)) return {false, j};
  }
  return {true, std::nullopt};
}

auto is_shedding_vertex(const SimplicialComplex& k, int v) -> bool {
  if (!k.vertices().contains(v)) return false;
  const auto del = delete_vertex(k, v);
  return std::all_of(del.facets().begin(), del.facets().end(), [&k](Face f) { return k.is_facet(f); });
}

auto compose_shelling(const SimplicialComplex& k, int v, const std::vector<Face>& order_del,
                      const std::vector<Face>& order_lk) -> ShellingOrder {
  if (!k.is_pure()) throw DomainError("compose_shelling: complex is not pure");
  if (!is_shedding_vertex(k, v)) throw DomainError("compose_shelling: " + k.label(v) + " is not a shedding vertex");
  auto check_part = [](const SimplicialComplex& part, const std::vector<Face>& o, const char* name) {
    ShellingCheck c;
    try {
      c = check_shelling_order(part, o);
    } catch (const DomainError& e) {
      throw DomainError(std::string("compose_shelling: ") + name + ": " + e.what());
    }
    if (!c.valid) throw DomainError(std::string("compose_shelling: ") + name + " order is not a shelling");
  };
  check_part(delete_vertex(k, v), order_del, "deletion");
  check_part(link(k, Face::single(v)), order_lk, "link");
  std::vector<Face> out = order_del;
  for (Face f : order_lk) out.push_back(f.with(v));
  if (!check_shelling_order(k, out).valid) throw DomainError("compose_shelling: composed order fails the checker");
  return ShellingOrder::from_sequence(std::move(out));
}

auto skeleton_shelling_order(Face simplex, int d) -> ShellingOrder {
  if (d < 0 || d >= simplex.size()) throw DomainError("skeleton dimension out of range");
  std::vector<Face> out;
  for_each_subset_of_size(simplex, d + 1, [&out](Face f) { out.push_back(f); });
  return ShellingOrder::from_sequence(std::move(out));
}

auto skeleton_shelling_order(int s, int d) -> ShellingOrder {
  if (s < 1 || s > kMaxVertices) throw DomainError("simplex size out of range");
  return skeleton_shelling_order(VertexSet::range(s), d);
}

auto join_shelling_order(const std::vector<Face>& o1, const std::vector<Face>& o2) -> ShellingOrder {
  VertexSet s1;
  VertexSet s2;
  for (Face f : o1) s1 |= f;
  for (Face g : o2) s2 |= g;
  if (s1.intersects(s2)) throw DomainError("join_shelling_order: supports overlap");
  std::vector<Face> out;
  for (Face f : o1) {
    for (Face g : o2) out.push_back(f | g);
  }
  return ShellingOrder::from_sequence(std::move(out));
}

auto search_shelling_order(const SimplicialComplex& k, std::size_t budget) -> SearchResult {
  require_pure(k);
  const auto& facets = k.facets();
  const std::size_t t = facets.size();
  if (t > budget || t > 26) return {SearchStatus::BudgetExceeded, std::nullopt};
  if (t == 0) return {SearchStatus::Found, ShellingOrder{}};

  std::vector<bool> dead(std::size_t{1} << t, false);
  std::vector<Face> prefix;
  prefix.reserve(t);
  const std::uint32_t full = (std::uint32_t{1} << t) - 1;

  auto dfs = [&](auto& self, std::uint32_t used) -> bool {
    if (used == full) return true;
    if (dead[used]) return false;
    for (std::size_t i = 0; i < t; ++i) {
      if ((used >> i) & 1U) continue;
      if (!step_ok(facets[i], prefix.data(), prefix.size())) continue;
      prefix.push_back(facets[i]);
      if (self(self, used | (std::uint32_t{1} << i))) return true;
      prefix.pop_back();
    }
    dead[used] = true;
    return false;
  };
  if (!dfs(dfs, 0)) return {SearchStatus::NoneExists, std::nullopt};
  return {SearchStatus::Found, ShellingOrder::from_sequence(prefix)};
}

}  // namespace gridtop
