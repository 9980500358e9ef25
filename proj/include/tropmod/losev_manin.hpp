#pragma once

#include <vector>

#include "tropmod/graph.hpp"
#include "tropmod/weight_data.hpp"

namespace tropmod {

// An ordered partition of {1..n}: nonempty, pairwise disjoint blocks whose
// union is {1..n}, in sequence order.
using OrderedPartition = std::vector<std::vector<int>>;

// The weights (1, 1/n, ..., 1/n, 1) of arity n+2, genus zero. Externally the
// legs are labeled 0..n+1 (the two heavy legs at the ends); internally the
// labels shift up by one to 1..n+2.
WeightData lm_weights(int n);

// All ordered partitions of {1..n} into exactly k blocks, in the
// lexicographic order of their block-assignment words. The count is
// k! * Stirling2(n, k).
std::vector<OrderedPartition> ordered_partitions(int n, int k);

// The chain realizing an ordered partition: one genus-0 vertex per block in
// sequence, joined in a path; external leg 0 at the first vertex, external
// leg n+1 at the last, block i's legs at vertex i. The result is stable of
// type (0, lm_weights(n)).
WeightedGraph chain_graph(const OrderedPartition& partition, int n);

// Compares the partition counts per dimension against the f-vector of the
// complex built from lm_weights(n), and verifies that the chain graphs hit
// every catalog class exactly once.
struct LmCheckResult {
  std::vector<long long> partition_counts;  // index l: partitions into l+1 blocks
  std::vector<long long> complex_fvector;
  bool counts_equal = false;
  bool bijection_ok = false;

  bool passed() const { return counts_equal && bijection_ok; }
};

LmCheckResult lm_fvector_check(int n);

}  // namespace tropmod
