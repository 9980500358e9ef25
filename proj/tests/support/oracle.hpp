#pragma once

// Brute-force reference implementations used as independent oracles. These
// deliberately avoid the library's canonical-labeling machinery: isomorphism
// is decided by exhaustive permutation search and enumeration by generating
// every labeled candidate.

#include <optional>
#include <vector>

#include "tropmod/canonical.hpp"
#include "tropmod/graph.hpp"
#include "tropmod/weight_data.hpp"

namespace oracle {

// A vertex bijection a -> b preserving genus labels, leg roots (pointwise by
// label), and the edge multiset; empty if none exists.
std::optional<std::vector<int>> brute_isomorphism(const tropmod::WeightedGraph& a,
                                                  const tropmod::WeightedGraph& b);

// Every compatible (vertex permutation, edge permutation) pair, found by
// exhaustive search over both permutation spaces.
struct BrutePairGroup {
  std::vector<tropmod::VertexEdgePerm> elements;
  unsigned long long flag_order = 1;  // elements.size() * 2^#loops
};

BrutePairGroup brute_automorphisms(const tropmod::WeightedGraph& g);

// Exhaustive enumeration of stability classes, layered by edge count: all
// connected multigraphs with at most max_edges edges, all genus assignments
// with total genus datum.g, all leg placements, filtered by the stability
// inequalities (reimplemented here over scaled integers), deduplicated by
// brute_isomorphism.
std::vector<std::vector<tropmod::WeightedGraph>> brute_enumerate(
    const tropmod::WeightData& datum, int max_edges);

}  // namespace oracle
