#include "doctest.h"

#include <sstream>

#include "gridtop/complex.hpp"
#include "gridtop/error.hpp"
#include "gridtop/facet_io.hpp"
#include "gridtop/homology.hpp"
#include "oracles.hpp"

using namespace gridtop;

namespace {

const Universe kSix{"1", "2", "3", "4", "5", "6"};

auto total3_g1() -> SimplicialComplex {
  return SimplicialComplex::from_facets(kSix, {{0, 3, 5}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

auto pentagon() -> SimplicialComplex {
  return SimplicialComplex::from_facets({"1", "2", "3", "4", "5"}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

auto facet_strings(const SimplicialComplex& k) -> std::vector<std::string> {
  std::vector<std::string> out;
  for (Face f : k.facets()) out.push_back(k.face_to_string(f));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("from_facets keeps maximal faces") {
  const auto k = total3_g1();
  CHECK(k.facet_count() == 4);
  CHECK(k.dimension() == 2);
  const auto sub = SimplicialComplex::from_facets(kSix, {{0, 1, 2}, {0, 1}, {0, 1, 2}});
  CHECK(sub.facets() == std::vector<Face>{Face{0, 1, 2}});
  CHECK(SimplicialComplex::from_facets(kSix, {}).is_void());
  CHECK_THROWS_AS(SimplicialComplex::from_facets(kSix, {{0, 7}}), DomainError);
}

TEST_CASE("void complex and the empty-face complex differ") {
  const auto v = SimplicialComplex::void_complex(kSix);
  const auto e = SimplicialComplex::from_facets(kSix, {Face{}});
  CHECK(v.is_void());
  CHECK_FALSE(e.is_void());
  CHECK(e.is_face(Face{}));
  CHECK_FALSE(v.is_face(Face{}));
  CHECK_THROWS_AS(v.dimension(), DomainError);
  CHECK(e.dimension() == -1);
  CHECK(reduced_betti(e, 2)[-1] == 1);
  CHECK(reduced_betti(v, 2).values.empty());
}

TEST_CASE("face queries") {
  const auto k = total3_g1();
  CHECK(k.is_face(k.face_of({"2", "4"})));
  CHECK_FALSE(k.is_face(k.face_of({"1", "3"})));
  CHECK(k.is_facet(k.face_of({"2", "4", "6"})));
  CHECK(pentagon().is_pure());
  CHECK(pentagon().dimension() == 1);
  CHECK_FALSE(SimplicialComplex::from_facets(kSix, {{0, 1}, {2}}).is_pure());
  CHECK(k.face_to_string(Face{}) == "-");
}

TEST_CASE("link, deletion and star") {
  const auto k = total3_g1();
  const Face four = k.face_of({"4"});
  CHECK(facet_strings(link(k, four)) == std::vector<std::string>{"1 6", "2 5", "2 6"});
  CHECK(facet_strings(delete_vertex(k, 3)) == std::vector<std::string>{"1 6", "2 3 6", "2 5"});
  CHECK(delete_face(k, Face{}).is_void());
  const auto edge = SimplicialComplex::from_facets({"x", "y", "z"}, {{0, 1}});
  CHECK(delete_vertex(edge, 2) == edge);
  CHECK(facet_strings(star(k, four)) == std::vector<std::string>{"1 4 6", "2 4 5", "2 4 6"});
  CHECK(star(k, k.face_of({"1", "3"})).is_void());
  CHECK_THROWS_AS(link(k, k.face_of({"1", "3"})), DomainError);
}

TEST_CASE("link, deletion and star agree with enumeration") {
  const auto k = total3_g1();
  const auto faces = oracle::face_masks(k);
  for (oracle::Mask w : faces) {
    CHECK(oracle::face_masks(link(k, Face(w))) == oracle::link_faces(faces, w));
    std::vector<oracle::Mask> del;
    std::vector<oracle::Mask> st;
    for (oracle::Mask s : faces) {
      if ((s & w) != w) del.push_back(s);
      if (std::binary_search(faces.begin(), faces.end(), s | w)) st.push_back(s);
    }
    if (w != 0) CHECK(oracle::face_masks(delete_face(k, Face(w))) == del);
    CHECK(oracle::face_masks(star(k, Face(w))) == st);
  }
}

TEST_CASE("cone, suspension and join") {
  const auto s0 = SimplicialComplex::from_facets({"p", "q"}, {{0}, {1}});
  const auto circle = suspension(s0);
  CHECK(circle.facet_count() == 4);
  CHECK(reduced_betti(circle, 2)[1] == 1);
  const auto c = cone(pentagon(), "apex");
  CHECK(c.universe_size() == 6);
  CHECK(wedge_profile(reduced_betti(c, 2)) == WedgeProfile{});
  CHECK_THROWS_AS(cone(s0, "p"), DomainError);

  const auto j = join(s0, SimplicialComplex::from_facets({"u", "v"}, {{0}, {1}}));
  CHECK(j.facet_count() == 4);
  CHECK(reduced_betti(j, 2)[1] == 1);
  CHECK_THROWS_AS(join(s0, s0), DomainError);
}

TEST_CASE("skeleta") {
  const auto tri = SimplicialComplex::simplex({"1", "2", "3"}, Face{0, 1, 2});
  CHECK(skeleton(tri, 1).facet_count() == 3);
  const auto big = SimplicialComplex::simplex({"1", "2", "3", "4"}, Face{0, 1, 2, 3});
  CHECK(skeleton(big, 1).facet_count() == 6);
}

TEST_CASE("census and intersection") {
  CHECK(census(pentagon()) == std::vector<std::size_t>{1, 5, 5});
  const auto k = total3_g1();
  const auto star4 = star(k, k.face_of({"4"}));
  CHECK(equals(intersect(k, star4), star4));
  CHECK(is_subcomplex(star4, k));
  CHECK_FALSE(is_subcomplex(k, star4));
  CHECK(equals(unite(star4, delete_vertex(k, 3)), k));
  CHECK_THROWS_AS(intersect(k, pentagon()), DomainError);
  const EnumerationLimits tiny{4};
  CHECK_THROWS_AS(all_faces_by_dim(k, tiny), CapacityError);
}

TEST_CASE("permuting labels preserves homology") {
  const auto k = total3_g1();
  const std::vector<int> perm{5, 3, 1, 0, 2, 4};
  const auto p = permute(k, perm);
  CHECK(p.facet_count() == k.facet_count());
  CHECK(reduced_betti(p, 2).same_numbers(reduced_betti(k, 2)));
  CHECK(reduced_betti(p, 3).same_numbers(reduced_betti(k, 3)));
}

TEST_CASE("facet list round trip") {
  const auto k = total3_g1();
  std::stringstream buf;
  write_facets(buf, k);
  CHECK(buf.str().rfind("#universe:", 0) == 0);
  const auto back = read_facets(buf);
  CHECK(back == k);

  std::istringstream plain("# a comment\nb c\n\na\n");
  const auto q = read_facets(plain);
  CHECK(q.universe() == Universe{"b", "c", "a"});
  CHECK(q.facet_count() == 2);

  std::istringstream empty_face("-\n");
  CHECK(read_facets(empty_face).facets() == std::vector<Face>{Face{}});
  std::istringstream nothing("# nothing\n");
  CHECK(read_facets(nothing).is_void());

  std::istringstream bad("#universe: a b\na z\n");
  CHECK_THROWS_AS(read_facets(bad), ParseError);

  std::stringstream seq;
  write_face_sequence(seq, k.universe(), k.facets());
  CHECK(read_face_sequence(seq, k.universe()) == k.facets());
}
