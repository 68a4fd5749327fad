#include "doctest.h"

#include "gridtop/cutgen.hpp"
#include "gridtop/error.hpp"
#include "gridtop/families.hpp"
#include "gridtop/homology.hpp"
#include "gridtop/shelling.hpp"
#include "oracles.hpp"

using namespace gridtop;

namespace {

const Universe kFive{"1", "2", "3", "4", "5"};

auto pentagon() -> SimplicialComplex {
  return SimplicialComplex::from_facets(kFive, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

}  // namespace

TEST_CASE("pairwise checker") {
  const auto p = pentagon();
  const std::vector<Face> good{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  CHECK(check_shelling_order(p, good).valid);
  const std::vector<Face> bad{{0, 1}, {2, 3}, {1, 2}, {3, 4}, {0, 4}};
  const auto res = check_shelling_order(p, bad);
  CHECK_FALSE(res.valid);
  CHECK(res.first_failure == 1);

  const auto one = SimplicialComplex::simplex(kFive, Face{0, 2});
  CHECK(check_shelling_order(one, one.facets()).valid);
  CHECK_THROWS_AS(check_shelling_order(p, {{0, 1}}), DomainError);
  const auto mixed = SimplicialComplex::from_facets(kFive, {{0, 1}, {2}});
  CHECK_THROWS_AS(check_shelling_order(mixed, mixed.facets()), DomainError);
}

TEST_CASE("checker agrees with the definition on every order of small complexes") {
  for (const auto& cx : {pentagon(), cut_complex(make_grid(2, 3), 3), total_cut_complex(make_grid(2, 3), 2)}) {
    auto order = cx.facets();
    if (order.size() > 7) order.resize(7);
    const auto sub = SimplicialComplex::from_facets(cx.universe(), order);
    std::sort(order.begin(), order.end());
    do {
      std::vector<oracle::Mask> masks;
      for (Face f : order) masks.push_back(f.bits());
      CHECK(check_shelling_order(sub, order).valid == oracle::is_shelling(masks));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("shedding vertices") {
  const auto g = make_grid(2, 3);
  CHECK(is_shedding_vertex(cut_complex(g, 3), g.index_of("b3")));
  const auto gp = make_family({FamilyTag::G2xnPrime, 3, 0});
  CHECK(is_shedding_vertex(cut_complex(gp, 3), gp.index_of("a4")));
  const auto edge = SimplicialComplex::from_facets({"x", "y"}, {{0, 1}});
  CHECK_FALSE(is_shedding_vertex(edge, 0));
}

TEST_CASE("composition") {
  const auto path = SimplicialComplex::from_facets({"x", "y", "a"}, {{0, 2}, {1, 2}});
  const auto order = compose_shelling(path, 0, {{1, 2}}, {{2}});
  CHECK(order.facets == std::vector<Face>{{1, 2}, {0, 2}});
  CHECK(check_shelling_order(path, order.facets).valid);
  CHECK_THROWS_AS(compose_shelling(path, 2, {}, {}), DomainError);

  const auto edge = SimplicialComplex::from_facets({"x", "y"}, {{0, 1}});
  CHECK_THROWS_AS(compose_shelling(edge, 0, {{1}}, {{1}}), DomainError);
}

TEST_CASE("skeleton and join orders") {
  const auto tri = skeleton_shelling_order(3, 1);
  CHECK(tri.facets == std::vector<Face>{{0, 1}, {0, 2}, {1, 2}});
  const auto tri_cx = SimplicialComplex::from_facets({"1", "2", "3"}, tri.facets);
  CHECK(check_shelling_order(tri_cx, tri.facets).valid);
  const auto four = skeleton_shelling_order(4, 1);
  CHECK(four.facets.size() == 6);
  CHECK(check_shelling_order(SimplicialComplex::from_facets({"1", "2", "3", "4"}, four.facets), four.facets).valid);
  CHECK(join_shelling_order({{0}}, {{2, 3}}).facets == std::vector<Face>{{0, 2, 3}});
  CHECK_THROWS_AS(join_shelling_order({{0}}, {{0, 1}}), DomainError);
}

TEST_CASE("search") {
  const auto found = search_shelling_order(pentagon());
  REQUIRE(found.status == SearchStatus::Found);
  CHECK(check_shelling_order(pentagon(), found.order->facets).valid);

  const auto two_edges = SimplicialComplex::from_facets({"1", "2", "3", "4"}, {{0, 1}, {2, 3}});
  CHECK(search_shelling_order(two_edges).status == SearchStatus::NoneExists);

  const auto d4 = cut_complex(make_grid(2, 3), 4);
  const auto r = search_shelling_order(d4);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(check_shelling_order(d4, r.order->facets).valid);

  const auto many = cut_complex(make_grid(2, 5), 4);
  CHECK(search_shelling_order(many).status == SearchStatus::BudgetExceeded);
}

TEST_CASE("constructed shellings of the 2 x n cut complexes") {
  for (int n = 3; n <= 5; ++n) {
    const auto g = make_grid(2, n);
    for (int k = 3; k <= 2 * n - 3; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto cx = cut_complex(g, k);
      const auto order = shelling_for_cut_2xn(n, k);
      CHECK(check_shelling_order(cx, order.facets).valid);
      std::vector<oracle::Mask> masks;
      for (Face f : order.facets) masks.push_back(f.bits());
      CHECK(oracle::is_shelling(masks));
      const auto b = reduced_betti(cx, 2);
      CHECK(static_cast<long long>(order.full_attachment_count()) == b[cx.dimension()]);
      CHECK(wedge_profile(b).has_value());
    }
  }
  CHECK_THROWS_AS(shelling_for_cut_2xn(3, 4), DomainError);
  CHECK_THROWS_AS(shelling_for_cut_2xn(2, 3), DomainError);
}
