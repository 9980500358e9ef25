#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tropmod/rational.hpp"
#include "tropmod/weight_data.hpp"

namespace tropmod {

struct WeightData;

// A weighted graph with marked legs: vertices carry genus labels, edges form
// a multiset of unordered vertex pairs (loops allowed), and legs are labeled
// half-edges attached to root vertices. Vertices are dense ids 0..V-1; an
// edge's identity is its index; leg i (0-based) carries the label i+1.
//
// Instances are immutable values after construction. Construction validates
// connectivity and incidence, so every operation below can assume a sane
// graph.
struct WeightedGraph {
  std::vector<int> genus_labels;           // per vertex
  std::vector<std::pair<int, int>> edges;  // normalized so first <= second
  std::vector<int> leg_roots;              // leg_roots[i] = root vertex of label i+1

  static WeightedGraph make(std::vector<int> genus_labels,
                            std::vector<std::pair<int, int>> edges,
                            std::vector<int> leg_roots);

  int vertex_count() const { return static_cast<int>(genus_labels.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int leg_count() const { return static_cast<int>(leg_roots.size()); }
  bool is_loop(int e) const { return edges[e].first == edges[e].second; }

  bool operator==(const WeightedGraph& o) const = default;
};

// Record of collapsing a set of edges. vertex_map sends source vertices to
// target vertices; edge_map sends surviving source edges to target edges and
// is -1 exactly on the contracted ones.
struct ContractionMap {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::set<int> contracted;
};

// g(G) = #E - #V + 1 + sum of genus labels.
int genus(const WeightedGraph& g);

// Number of edge flags at v; each loop contributes two.
int edge_valence(const WeightedGraph& g, int v);

// Sum of the weights of the legs rooted at v.
Rational leg_weight(const WeightedGraph& g, int v, const WeightData& datum);

// Coefficients 2h(v) - 2 + |v|_E + |v|_A of the twisted canonical divisor.
std::vector<Rational> canonical_divisor(const WeightedGraph& g, const WeightData& datum);

// True iff genus(g) == datum.g and every canonical divisor coefficient is
// strictly positive.
bool is_stable(const WeightedGraph& g, const WeightData& datum);

// Collapses the edges in `to_contract`. Non-loop edges merge their endpoints;
// the merged vertex's genus is the genus of the collapsed subgraph (labels
// plus first Betti number), so loops add one. Result is independent of
// contraction order.
std::pair<WeightedGraph, ContractionMap> contract(const WeightedGraph& g,
                                                  const std::set<int>& to_contract);

// The one-vertex graph {*}_{g,n}: genus label g, legs 1..n, no edges.
WeightedGraph single_vertex_graph(int g, int n);

}  // namespace tropmod
