#include <doctest.h>

#include <set>

#include "support/fixtures.hpp"
#include "tropmod/canonical.hpp"
#include "tropmod/graph.hpp"

using namespace tropmod;
using namespace fixtures;

TEST_CASE("graph construction validates") {
  CHECK_THROWS_AS(WeightedGraph::make({}, {}, {}), ValidationError);
  CHECK_THROWS_AS(WeightedGraph::make({0, 0}, {}, {}), ValidationError);  // disconnected
  CHECK_THROWS_AS(WeightedGraph::make({0}, {{0, 1}}, {}), ValidationError);
  CHECK_THROWS_AS(WeightedGraph::make({0}, {}, {1}), ValidationError);
  CHECK_THROWS_AS(WeightedGraph::make({-1}, {}, {}), ValidationError);
}

TEST_CASE("genus") {
  CHECK(genus(WeightedGraph::make({2}, {}, {})) == 2);
  CHECK(genus(theta()) == 2);
  CHECK(genus(loop_with_leg()) == 1);
  CHECK(genus(dumbbell()) == 2);
}

TEST_CASE("edge valence counts loops twice") {
  CHECK(edge_valence(theta(), 0) == 3);
  CHECK(edge_valence(theta(), 1) == 3);
  CHECK(edge_valence(loop_with_leg(), 0) == 2);
  CHECK(edge_valence(WeightedGraph::make({0}, {}, {}), 0) == 0);
  CHECK_THROWS_AS(edge_valence(theta(), 7), ValidationError);
}

TEST_CASE("leg weight sums exactly") {
  WeightData a = kapranov_final_5();
  WeightedGraph g = two_vertex_split_23();
  CHECK(leg_weight(g, 0, a) == Rational(1));          // legs 1,2 with weight 1/2
  CHECK(leg_weight(g, 1, a) == Rational(5, 2));       // legs 3,4,5: 1/2+1+1
  CHECK(leg_weight(theta(), 0, classical(2, 0)) == Rational(0));
  WeightData thirds = third_weights_5();
  WeightedGraph star = single_vertex_graph(0, 5);
  CHECK(leg_weight(star, 0, thirds) == Rational(7, 3));
  CHECK_THROWS_AS(leg_weight(star, 0, classical(0, 4)), ValidationError);
}

TEST_CASE("canonical divisor coefficients") {
  auto coeff = canonical_divisor(theta(), classical(2, 0));
  CHECK(coeff == std::vector<Rational>{Rational(1), Rational(1)});

  WeightedGraph vertex_11 = WeightedGraph::make({1}, {}, {0});
  CHECK(canonical_divisor(vertex_11, classical(1, 1)) ==
        std::vector<Rational>{Rational(1)});

  auto fig = canonical_divisor(two_vertex_split_23(), kapranov_final_5());
  CHECK(fig == std::vector<Rational>{Rational(0), Rational(3, 2)});
}

TEST_CASE("stability matches the divisor criterion") {
  CHECK(is_stable(two_vertex_split_23(), classical(0, 5)));
  CHECK_FALSE(is_stable(two_vertex_split_23(), kapranov_final_5()));
  CHECK(is_stable(single_vertex_graph(0, 5), third_weights_5()));
  // Wrong total genus fails regardless of the divisor.
  CHECK_FALSE(is_stable(theta(), classical(3, 0)));
}

TEST_CASE("contracting a theta edge yields a double loop") {
  auto [contracted, cmap] = contract(theta(), {0});
  CHECK(contracted.vertex_count() == 1);
  CHECK(contracted.edge_count() == 2);
  CHECK(contracted.is_loop(0));
  CHECK(contracted.is_loop(1));
  CHECK(contracted.genus_labels[0] == 0);
  CHECK(genus(contracted) == 2);
  CHECK(cmap.contracted == std::set<int>{0});
  CHECK(cmap.edge_map[0] == -1);
  CHECK(cmap.edge_map[1] == 0);
  CHECK(cmap.edge_map[2] == 1);
}

TEST_CASE("contracting a loop raises the genus label") {
  auto [contracted, cmap] = contract(loop_with_leg(), {0});
  CHECK(contracted.vertex_count() == 1);
  CHECK(contracted.edge_count() == 0);
  CHECK(contracted.genus_labels[0] == 1);
  CHECK(contracted.leg_roots == std::vector<int>{0});
}

TEST_CASE("contracting nothing is the identity") {
  auto [contracted, cmap] = contract(theta(), {});
  CHECK(contracted == theta());
  for (int v = 0; v < 2; ++v) CHECK(cmap.vertex_map[v] == v);
  for (int e = 0; e < 3; ++e) CHECK(cmap.edge_map[e] == e);
}

TEST_CASE("contraction rejects unknown edges") {
  CHECK_THROWS_AS(contract(theta(), {5}), ValidationError);
}

TEST_CASE("contraction preserves genus and stability on a sweep of subsets") {
  WeightData datum = classical(2, 0);
  for (const WeightedGraph& g : {theta(), dumbbell()}) {
    for (int mask = 0; mask < (1 << g.edge_count()); ++mask) {
      std::set<int> subset;
      for (int e = 0; e < g.edge_count(); ++e)
        if (mask & (1 << e)) subset.insert(e);
      auto [contracted, cmap] = contract(g, subset);
      CHECK(genus(contracted) == genus(g));
      CHECK(is_stable(contracted, datum));
    }
  }
}

TEST_CASE("contraction is order independent") {
  for (const WeightedGraph& g : {theta(), dumbbell()}) {
    auto [both, cmap_both] = contract(g, {0, 1});
    auto [first, cmap_first] = contract(g, {0});
    auto [then, cmap_then] = contract(first, {cmap_first.edge_map[1]});
    CHECK(canonical_form(both).key == canonical_form(then).key);

    auto [second, cmap_second] = contract(g, {1});
    auto [other, cmap_other] = contract(second, {cmap_second.edge_map[0]});
    CHECK(canonical_form(both).key == canonical_form(other).key);
  }
}
