#pragma once

#include <string>
#include <vector>

#include "tropmod/catalog.hpp"
#include "tropmod/weight_data.hpp"

namespace tropmod {

// Walls of the weight domain D_{g,n}: hyperplanes sum_{j in S} a_j = 1 for
// subsets S of {1..n}. The fine decomposition takes 2 <= |S| <= n - 2[g=0],
// the coarse one 2 < |S| <= n - 2[g=0].
enum class WallKind { Coarse, Fine };

struct WallSet {
  int g = 0;
  int n = 0;
  WallKind kind = WallKind::Fine;
  std::vector<std::vector<int>> walls;  // sorted subsets (1-based), ordered by size then lex
};

WallSet walls(int g, int n, WallKind kind);

// Sign of sum_{j in S} a_j - 1 per wall, aligned with the wall order. Defined
// only off the walls; hitting one raises OnWallError naming the subset.
struct ChamberSignature {
  std::vector<int> signs;  // +1 or -1
  bool operator==(const ChamberSignature& o) const = default;
};

ChamberSignature chamber_signature(const WeightData& a, const WallSet& w);

bool same_chamber(const WeightData& a, const WeightData& b, const WallSet& w);

// Weight sequence of the blow-up construction of the n-marked rational
// space: (n-r-1) copies of 1/(n-r-1), then s/(n-r-1), then r ones, with
// 1 <= r <= n-3 and 1 <= s <= n-r-2.
WeightData kapranov_weights(int n, int r, int s);

// Per-layer catalog differences between two data with the same (g, n):
// `lost` holds classes stable for `from` but not `to`, `gained` the reverse.
struct WallCrossDiff {
  std::vector<std::vector<CatalogEntry>> lost;    // indexed by edge count
  std::vector<std::vector<CatalogEntry>> gained;  // indexed by edge count
};

WallCrossDiff wall_cross_diff(const WeightData& from, const WeightData& to);

// The two-vertex graph witnessing the wall sum_{i in S} a_i = 1: legs in S
// on a genus-0 vertex, the rest on a genus-g vertex across a single edge.
// It is (g,A)-stable exactly when sum_{i in S} a_i > 1.
WeightedGraph wall_witness_graph(int g, int n, const std::vector<int>& subset);

}  // namespace tropmod
