#pragma once

// Small graphs shared across the test suites.

#include "tropmod/graph.hpp"
#include "tropmod/weight_data.hpp"

namespace fixtures {

using tropmod::Rational;
using tropmod::WeightData;
using tropmod::WeightedGraph;

// Two genus-0 vertices joined by three parallel edges; genus 2, no legs.
inline WeightedGraph theta() {
  return WeightedGraph::make({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {});
}

// Two genus-0 vertices, a loop on each, one bridge; genus 2, no legs.
inline WeightedGraph dumbbell() {
  return WeightedGraph::make({0, 0}, {{0, 0}, {0, 1}, {1, 1}}, {});
}

// Genus-0 vertex with one loop and leg 1; genus 1.
inline WeightedGraph loop_with_leg() {
  return WeightedGraph::make({0}, {{0, 0}}, {0});
}

// v1(legs 1,2) -- v2(legs 3,4,5), both genus 0.
inline WeightedGraph two_vertex_split_23() {
  return WeightedGraph::make({0, 0}, {{0, 1}}, {0, 0, 1, 1, 1});
}

inline WeightData classical(int g, int n) {
  return WeightData::make(g, std::vector<Rational>(n, Rational(1)));
}

inline WeightData kapranov_final_5() {  // (1/2, 1/2, 1/2, 1, 1)
  return WeightData::make(0, {Rational(1, 2), Rational(1, 2), Rational(1, 2),
                              Rational(1), Rational(1)});
}

inline WeightData third_weights_5() {  // (1/3, 1/3, 1/3, 1/3, 1)
  return WeightData::make(0, {Rational(1, 3), Rational(1, 3), Rational(1, 3),
                              Rational(1, 3), Rational(1)});
}

}  // namespace fixtures
