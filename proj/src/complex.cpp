#include "gridtop/complex.hpp"

#include <algorithm>

#include "gridtop/error.hpp"

namespace gridtop {

auto maximal_faces(std::vector<Face> faces) -> std::vector<Face> {
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  std::size_t larger_end = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i > 0 && faces[i].size() != faces[i - 1].size()) larger_end = kept.size();
    const Face f = faces[i];
    const bool covered = std::any_of(kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(larger_end),
                                     [f](Face g) { return g.contains(f); });
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

auto SimplicialComplex::from_facets(Universe universe, std::vector<Face> faces) -> SimplicialComplex {
  if (universe.size() > static_cast<std::size_t>(kMaxVertices)) throw CapacityError("universe exceeds 64 vertices");
  const VertexSet all = VertexSet::range(static_cast<int>(universe.size()));
  for (Face f : faces) {
    if (!all.contains(f)) throw DomainError("face outside the universe");
  }
  SimplicialComplex k;
  k.universe_ = std::move(universe);
  k.facets_ = maximal_faces(std::move(faces));
  return k;
}

auto SimplicialComplex::void_complex(Universe universe) -> SimplicialComplex {
  return from_facets(std::move(universe), {});
}

auto SimplicialComplex::simplex(Universe universe, Face f) -> SimplicialComplex {
  return from_facets(std::move(universe), {f});
}

auto SimplicialComplex::is_face(Face s) const -> bool {
  return std::any_of(facets_.begin(), facets_.end(), [s](Face f) { return f.contains(s); });
}

auto SimplicialComplex::is_facet(Face s) const -> bool {
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

auto SimplicialComplex::vertices() const -> VertexSet {
  VertexSet v;
  for (Face f : facets_) v |= f;
  return v;
}

auto SimplicialComplex::dimension() const -> int {
  if (is_void()) throw DomainError("the void complex has no dimension");
  int d = -1;
  for (Face f : facets_) d = std::max(d, f.dim());
  return d;
}

auto SimplicialComplex::is_pure() const -> bool {
  return std::all_of(facets_.begin(), facets_.end(), [this](Face f) { return f.size() == facets_.front().size(); });
}

auto SimplicialComplex::index_of(std::string_view label) const -> int {
  auto it = std::find(universe_.begin(), universe_.end(), label);
  if (it == universe_.end()) throw DomainError("unknown vertex label '" + std::string(label) + "'");
  return static_cast<int>(it - universe_.begin());
}

auto SimplicialComplex::face_of(std::initializer_list<std::string_view> labels) const -> Face {
  Face f;
  for (auto l : labels) f.insert(index_of(l));
  return f;
}

auto SimplicialComplex::face_to_string(Face f) const -> std::string {
  if (f.empty()) return "-";
  std::string out;
  for (int v : f) {
    if (!out.empty()) out += ' ';
    out += universe_[v];
  }
  return out;
}

namespace {

void require_same_universe(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.universe() != b.universe()) throw DomainError("complexes live on different universes");
}

auto with_fresh_labels(const Universe& u, std::initializer_list<std::string> fresh) -> Universe {
  Universe out = u;
  for (const auto& l : fresh) {
    if (std::find(out.begin(), out.end(), l) != out.end()) throw DomainError("apex label '" + l + "' is not fresh");
    out.push_back(l);
  }
  if (out.size() > static_cast<std::size_t>(kMaxVertices)) throw CapacityError("universe exceeds 64 vertices");
  return out;
}

}  // namespace

auto link(const SimplicialComplex& k, Face s) -> SimplicialComplex {
  if (!k.is_face(s)) throw DomainError("link: not a face of the complex");
  std::vector<Face> out;
  for (Face f : k.facets()) {
    if (f.contains(s)) out.push_back(f - s);
  }
  return SimplicialComplex::from_facets(k.universe(), std::move(out));
}

auto delete_face(const SimplicialComplex& k, Face s) -> SimplicialComplex {
  std::vector<Face> out;
  for (Face f : k.facets()) {
    if (!f.contains(s)) {
      out.push_back(f);
      continue;
    }
    for (int v : s) out.push_back(f.without(v));
  }
  return SimplicialComplex::from_facets(k.universe(), std::move(out));
}

auto delete_vertex(const SimplicialComplex& k, int v) -> SimplicialComplex {
  return delete_face(k, Face::single(v));
}

auto star(const SimplicialComplex& k, Face s) -> SimplicialComplex {
  std::vector<Face> out;
  for (Face f : k.facets()) {
    if (f.contains(s)) out.push_back(f);
  }
  return SimplicialComplex::from_facets(k.universe(), std::move(out));
}

auto cone(const SimplicialComplex& k, const std::string& apex) -> SimplicialComplex {
  Universe u = with_fresh_labels(k.universe(), {apex});
  const int x = k.universe_size();
  std::vector<Face> out;
  for (Face f : k.facets()) out.push_back(f.with(x));
  return SimplicialComplex::from_facets(std::move(u), std::move(out));
}

auto suspension(const SimplicialComplex& k, const std::string& north, const std::string& south)
    -> SimplicialComplex {
  Universe u = with_fresh_labels(k.universe(), {north, south});
  const int x = k.universe_size();
  std::vector<Face> out;
  for (Face f : k.facets()) {
    out.push_back(f.with(x));
    out.push_back(f.with(x + 1));
  }
  return SimplicialComplex::from_facets(std::move(u), std::move(out));
}

auto join(const SimplicialComplex& k1, const SimplicialComplex& k2) -> SimplicialComplex {
  Universe u = k1.universe();
  for (const auto& l : k2.universe()) {
    if (std::find(k1.universe().begin(), k1.universe().end(), l) != k1.universe().end()) {
      throw DomainError("join: universes share label '" + l + "'");
    }
    u.push_back(l);
  }
  if (u.size() > static_cast<std::size_t>(kMaxVertices)) throw CapacityError("universe exceeds 64 vertices");
  const int shift = k1.universe_size();
  std::vector<Face> out;
  for (Face f : k1.facets()) {
    for (Face g : k2.facets()) out.push_back(f | Face(g.bits() << shift));
  }
  return SimplicialComplex::from_facets(std::move(u), std::move(out));
}

auto internal_join(const SimplicialComplex& k1, const SimplicialComplex& k2) -> SimplicialComplex {
  require_same_universe(k1, k2);
  if (k1.vertices().intersects(k2.vertices())) throw DomainError("join: vertex supports overlap");
  std::vector<Face> out;
  for (Face f : k1.facets()) {
    for (Face g : k2.facets()) out.push_back(f | g);
  }
  return SimplicialComplex::from_facets(k1.universe(), std::move(out));
}

auto skeleton(const SimplicialComplex& k, int d) -> SimplicialComplex {
  if (d < -1) throw DomainError("skeleton dimension must be at least -1");
  std::vector<Face> out;
  for (Face f : k.facets()) {
    if (f.size() <= d + 1) {
      out.push_back(f);
    } else {
      for_each_subset_of_size(f, d + 1, [&out](Face s) { out.push_back(s); });
    }
  }
  return SimplicialComplex::from_facets(k.universe(), std::move(out));
}

auto intersect(const SimplicialComplex& k1, const SimplicialComplex& k2) -> SimplicialComplex {
  require_same_universe(k1, k2);
  std::vector<Face> out;
  for (Face f : k1.facets()) {
    for (Face g : k2.facets()) out.push_back(f & g);
  }
  return SimplicialComplex::from_facets(k1.universe(), std::move(out));
}

auto unite(const SimplicialComplex& k1, const SimplicialComplex& k2) -> SimplicialComplex {
  require_same_universe(k1, k2);
  std::vector<Face> out = k1.facets();
  out.insert(out.end(), k2.facets().begin(), k2.facets().end());
  return SimplicialComplex::from_facets(k1.universe(), std::move(out));
}

auto unite(std::span<const SimplicialComplex> parts) -> SimplicialComplex {
  if (parts.empty()) throw DomainError("union of no complexes has no universe");
  std::vector<Face> out;
  for (const auto& p : parts) {
    require_same_universe(parts.front(), p);
    out.insert(out.end(), p.facets().begin(), p.facets().end());
  }
  return SimplicialComplex::from_facets(parts.front().universe(), std::move(out));
}

auto equals(const SimplicialComplex& k1, const SimplicialComplex& k2) -> bool { return k1 == k2; }

auto is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& k) -> bool {
  require_same_universe(sub, k);
  return std::all_of(sub.facets().begin(), sub.facets().end(), [&k](Face f) { return k.is_face(f); });
}

auto permute(const SimplicialComplex& k, std::span<const int> perm) -> SimplicialComplex {
  const int n = k.universe_size();
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation size mismatch");
  Universe u(n);
  std::vector<bool> hit(n, false);
  for (int v = 0; v < n; ++v) {
    if (perm[v] < 0 || perm[v] >= n || hit[perm[v]]) throw DomainError("not a permutation");
    hit[perm[v]] = true;
    u[perm[v]] = k.universe()[v];
  }
  std::vector<Face> out;
  for (Face f : k.facets()) {
    Face g;
    for (int v : f) g.insert(perm[v]);
    out.push_back(g);
  }
  return SimplicialComplex::from_facets(std::move(u), std::move(out));
}

auto all_faces_by_dim(const SimplicialComplex& k, EnumerationLimits limits) -> std::vector<std::vector<Face>> {
  if (k.is_void()) return {};
  if (k.vertices().size() > limits.max_universe) {
    throw CapacityError("face enumeration over " + std::to_string(k.vertices().size()) +
                        " vertices exceeds the cap of " + std::to_string(limits.max_universe));
  }
  const int top = k.dimension() + 1;
  std::vector<std::vector<Face>> by_size(top + 1);
  for (Face f : k.facets()) by_size[f.size()].push_back(f);
  for (int s = top; s >= 0; --s) {
    auto& level = by_size[s];
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    if (s == 0) break;
    auto& below = by_size[s - 1];
    for (Face f : level) {
      for (int v : f) below.push_back(f.without(v));
    }
  }
  return by_size;
}

auto census(const SimplicialComplex& k, EnumerationLimits limits) -> std::vector<std::size_t> {
  std::vector<std::size_t> out;
  for (const auto& level : all_faces_by_dim(k, limits)) out.push_back(level.size());
  return out;
}

}  // namespace gridtop
