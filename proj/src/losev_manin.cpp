#include "tropmod/losev_manin.hpp"

#include <algorithm>
#include <set>

#include "tropmod/canonical.hpp"
#include "tropmod/cone_complex.hpp"

namespace tropmod {

WeightData lm_weights(int n) {
  if (n < 1) throw ValidationError("losev-manin weights need n >= 1");
  std::vector<Rational> weights;
  weights.emplace_back(1);
  for (int i = 0; i < n; ++i) weights.emplace_back(1, n);
  weights.emplace_back(1);
  return WeightData::make(0, std::move(weights));
}

std::vector<OrderedPartition> ordered_partitions(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw ValidationError("ordered partitions need 1 <= k <= n");
  std::vector<OrderedPartition> out;
  // Assignment words in lexicographic order, kept when surjective.
  std::vector<int> word(n, 0);
  while (true) {
    std::vector<int> hit(k, 0);
    for (int w : word) ++hit[w];
    if (std::all_of(hit.begin(), hit.end(), [](int c) { return c > 0; })) {
      OrderedPartition p(k);
      for (int i = 0; i < n; ++i) p[word[i]].push_back(i + 1);
      out.push_back(std::move(p));
    }
    int i = n - 1;
    while (i >= 0 && word[i] == k - 1) word[i--] = 0;
    if (i < 0) break;
    ++word[i];
  }
  return out;
}

WeightedGraph chain_graph(const OrderedPartition& partition, int n) {
  std::set<int> seen;
  for (const auto& block : partition) {
    if (block.empty()) throw ValidationError("ordered partition has an empty block");
    for (int x : block) {
      if (x < 1 || x > n) throw ValidationError("partition element out of range");
      if (!seen.insert(x).second) throw ValidationError("partition element repeated");
    }
  }
  if (static_cast<int>(seen.size()) != n)
    throw ValidationError("partition does not cover {1..n}");

  const int k = static_cast<int>(partition.size());
  std::vector<int> genus(k, 0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);

  // Internal labels: 1 is the external leg 0, j+1 is external j, n+2 is
  // external n+1.
  std::vector<int> legs(n + 2, 0);
  legs[0] = 0;
  legs[n + 1] = k - 1;
  for (int i = 0; i < k; ++i)
    for (int x : partition[i]) legs[x] = i;
  return WeightedGraph::make(std::move(genus), std::move(edges), std::move(legs));
}

LmCheckResult lm_fvector_check(int n) {
  if (n < 2) throw ValidationError("lm_fvector_check needs n >= 2");
  LmCheckResult result;

  std::vector<std::vector<OrderedPartition>> by_blocks(n + 1);
  for (int k = 1; k <= n; ++k) by_blocks[k] = ordered_partitions(n, k);
  for (int l = 0; l < n; ++l)
    result.partition_counts.push_back(static_cast<long long>(by_blocks[l + 1].size()));

  GeneralizedConeComplex cx = build_complex(lm_weights(n), false);
  result.complex_fvector = f_vector(cx);
  result.counts_equal = result.partition_counts == result.complex_fvector;

  // Chains must hit every catalog class exactly once, dimension by dimension.
  result.bijection_ok = true;
  for (int l = 0; l < n; ++l) {
    std::set<std::string> chain_keys;
    for (const auto& p : by_blocks[l + 1]) {
      std::string key = canonical_form(chain_graph(p, n)).key;
      if (!chain_keys.insert(key).second) result.bijection_ok = false;  // not injective
    }
    std::set<std::string> catalog_keys;
    if (l < static_cast<int>(cx.catalog.layers.size()))
      for (const auto& entry : cx.catalog.layers[l]) catalog_keys.insert(entry.key);
    if (chain_keys != catalog_keys) result.bijection_ok = false;
  }
  return result;
}

}  // namespace tropmod
