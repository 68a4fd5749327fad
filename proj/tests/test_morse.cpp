#include "doctest.h"

#include "gridtop/cutgen.hpp"
#include "gridtop/error.hpp"
#include "gridtop/families.hpp"
#include "gridtop/homology.hpp"
#include "gridtop/morse.hpp"
#include "oracles.hpp"

using namespace gridtop;

namespace {

auto triangle() -> SimplicialComplex {
  return SimplicialComplex::from_facets({"1", "2", "3"}, {{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace

TEST_CASE("element matching step") {
  const std::vector<Face> remaining{Face{}, Face{0}, Face{1}};
  const auto step = element_matching_step(remaining, 0);
  CHECK(step.pairs == std::vector<MatchedPair>{{Face{}, Face{0}}});
  CHECK(step.remaining == std::vector<Face>{Face{1}});
}

TEST_CASE("sequence matchings") {
  const auto tri = triangle();
  const auto none = sequence_matching(tri, {});
  CHECK(none.pairs.empty());
  const auto r = matching_report(tri, none);
  CHECK(r.acyclic);
  CHECK(r.critical_count() == 7);

  const auto c = cone(tri, "z");
  const auto m = sequence_matching(c, {c.index_of("z")});
  const auto rc = matching_report(c, m);
  CHECK(rc.acyclic);
  CHECK(rc.critical_count() == 0);
  CHECK(rc.empty_face_matched);
  CHECK(morse_wedge_verdict(rc) == WedgeProfile{});
}

TEST_CASE("acyclicity") {
  const auto tri = triangle();
  const PartialMatching cyclic{{{Face{0}, Face{0, 1}}, {Face{1}, Face{1, 2}}, {Face{2}, Face{0, 2}}}};
  CHECK_FALSE(check_acyclic(tri, cyclic));
  CHECK_THROWS_AS(morse_wedge_verdict(tri, cyclic), DomainError);
  const PartialMatching bad{{{Face{0}, Face{0, 1}}, {Face{0}, Face{0, 2}}}};
  CHECK_THROWS_AS(check_acyclic(tri, bad), DomainError);
  const PartialMatching gap{{{Face{}, Face{0, 1}}}};
  CHECK_THROWS_AS(validate_matching(tri, gap), DomainError);
  CHECK(check_acyclic(tri, PartialMatching{}));
}

TEST_CASE("matchings on random total cut complexes") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + trial % 6;
    const auto g = oracle::make_graph(n, oracle::random_edges(rng, n, 0.4));
    const auto cx = total_cut_complex(g, 2);
    if (cx.is_void()) continue;
    const auto m = sequence_matching(cx, g.vertices().elements());
    const auto r = matching_report(cx, m);
    CHECK(r.acyclic);
    CHECK(r.critical_euler() == euler_characteristic(cx));
    CHECK(weak_morse_inequalities_hold(r, reduced_betti(cx, 2)));
    CHECK(weak_morse_inequalities_hold(r, reduced_betti(cx, 3)));
  }
}

TEST_CASE("appendix sequence") {
  const auto g = make_family({FamilyTag::G3xn1, 3, 0});
  const auto seq = appendix_sequence(g, g.index_of("c4"));
  std::vector<std::string> names;
  for (int v : seq) names.push_back(g.label(v));
  CHECK(names == std::vector<std::string>{"c4", "c3", "c2", "c1", "b2", "b1", "a2", "a1"});
  CHECK_THROWS_AS(appendix_sequence(g, g.index_of("c2")), DomainError);
}

TEST_CASE("appendix matchings") {
  for (int m = 2; m <= 5; ++m) {
    CAPTURE(m);
    const auto run = appendix_total2cut_matching(AppendixFamily::G3xn1, m);
    CHECK(run.report.acyclic);
    CHECK(run.report.critical_count() == static_cast<std::size_t>(2 * m - 4));
    for (std::size_t s = 0; s < run.report.critical.size(); ++s) {
      if (static_cast<int>(s) != 3 * m - 4) CHECK(run.report.critical[s].empty());
    }
    CHECK(run.type1_after_apex == static_cast<std::size_t>(5 * m - 7));
    CHECK(run.type2_after_apex == static_cast<std::size_t>(3 * m - 3));
    CHECK(run.type2_matched_to_type1);
    CHECK(reduced_betti(run.complex, 2)[3 * m - 5] == 2 * m - 4);

    const auto h = appendix_total2cut_matching(AppendixFamily::H1, m);
    CHECK(h.report.acyclic);
    CHECK(h.report.critical_count() == static_cast<std::size_t>(2 * m - 4));
    CHECK(h.report.critical_in_dim(3 * m - 6) == static_cast<std::size_t>(2 * m - 4));
    CHECK(h.type1_after_apex == h.graph.edge_count() - 1);
    CHECK(h.type2_after_apex == static_cast<std::size_t>(h.graph.size() - 2));
    CHECK(h.type2_matched_to_type1);
  }
  const auto r3 = appendix_total2cut_matching(AppendixFamily::G3xn1, 3);
  CHECK(morse_wedge_verdict(r3.report) == WedgeProfile{2, 4});
  CHECK(morse_wedge_verdict(appendix_total2cut_matching(AppendixFamily::G3xn1, 4).report) == WedgeProfile{4, 7});
  CHECK(morse_wedge_verdict(appendix_total2cut_matching(AppendixFamily::H1, 3).report) == WedgeProfile{2, 3});
  CHECK(appendix_total2cut_matching(AppendixFamily::H1, 4).report.critical_in_dim(6) == 4);
  CHECK_THROWS_AS(appendix_total2cut_matching(AppendixFamily::H1, 1), DomainError);
}

TEST_CASE("increasing vertex order after the apex leaves extra critical faces") {
  for (int m = 3; m <= 4; ++m) {
    const auto g = make_family({FamilyTag::G3xn1, m, 0});
    const int apex = g.index_of(grid_label(2, m + 1));
    std::vector<int> rest;
    for (int v : g.vertices().without(apex)) rest.push_back(v);
    const auto run = appendix_total2cut_matching(AppendixFamily::G3xn1, m, rest);
    CHECK(run.report.acyclic);
    CHECK(run.report.critical_count() > static_cast<std::size_t>(2 * m - 4));
    // The complement of {apex, a1} stays unmatched.
    const Face y_a1 = g.vertices() - VertexSet{apex, g.index_of("a1")};
    const auto& level = run.report.critical[y_a1.size()];
    CHECK(std::find(level.begin(), level.end(), y_a1) != level.end());
  }
}
