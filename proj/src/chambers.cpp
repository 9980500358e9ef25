#include "tropmod/chambers.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tropmod {

namespace {

std::string subset_str(const std::vector<int>& s) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << "}";
  return out.str();
}

void collect_subsets(int n, int min_size, int max_size,
                     std::vector<std::vector<int>>& out) {
  // Subsets by size, lexicographically within a size.
  for (int size = min_size; size <= max_size; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i + 1;
    while (true) {
      out.push_back(pick);
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i + 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

}  // namespace

WallSet walls(int g, int n, WallKind kind) {
  if (g < 0 || n < 0) throw ValidationError("walls need g >= 0 and n >= 0");
  WallSet w{g, n, kind, {}};
  int min_size = kind == WallKind::Fine ? 2 : 3;
  int max_size = n - (g == 0 ? 2 : 0);
  if (max_size >= min_size) collect_subsets(n, min_size, max_size, w.walls);
  return w;
}

ChamberSignature chamber_signature(const WeightData& a, const WallSet& w) {
  if (a.leg_count() != w.n)
    throw ValidationError("weight arity does not match the wall set");
  ChamberSignature sig;
  sig.signs.reserve(w.walls.size());
  for (const auto& subset : w.walls) {
    Rational total(0);
    for (int j : subset) total += a.weights[j - 1];
    Rational diff = total - Rational(1);
    if (diff.sign() == 0)
      throw OnWallError("weights lie on the wall S=" + subset_str(subset), subset);
    sig.signs.push_back(diff.sign());
  }
  return sig;
}

bool same_chamber(const WeightData& a, const WeightData& b, const WallSet& w) {
  return chamber_signature(a, w) == chamber_signature(b, w);
}

WeightData kapranov_weights(int n, int r, int s) {
  if (n < 4) throw ValidationError("kapranov weights need n >= 4");
  if (r < 1 || r > n - 3)
    throw ValidationError("kapranov r must satisfy 1 <= r <= n-3");
  if (s < 1 || s > n - r - 2)
    throw ValidationError("kapranov s must satisfy 1 <= s <= n-r-2");
  std::vector<Rational> weights;
  for (int i = 0; i < n - r - 1; ++i) weights.emplace_back(1, n - r - 1);
  weights.emplace_back(s, n - r - 1);
  for (int i = 0; i < r; ++i) weights.emplace_back(1);
  return WeightData::make(0, std::move(weights));
}

WallCrossDiff wall_cross_diff(const WeightData& from, const WeightData& to) {
  if (from.leg_count() != to.leg_count() || from.g != to.g)
    throw ValidationError("diff requires matching genus and arity");
  StableGraphCatalog cat_from = enumerate_stable_graphs(from);
  StableGraphCatalog cat_to = enumerate_stable_graphs(to);

  WallCrossDiff diff;
  size_t layers = std::max(cat_from.layers.size(), cat_to.layers.size());
  diff.lost.resize(layers);
  diff.gained.resize(layers);
  for (size_t l = 0; l < cat_from.layers.size(); ++l)
    for (const auto& entry : cat_from.layers[l])
      if (!cat_to.find(entry.key)) diff.lost[l].push_back(entry);
  for (size_t l = 0; l < cat_to.layers.size(); ++l)
    for (const auto& entry : cat_to.layers[l])
      if (!cat_from.find(entry.key)) diff.gained[l].push_back(entry);
  return diff;
}

WeightedGraph wall_witness_graph(int g, int n, const std::vector<int>& subset) {
  std::set<int> in_subset(subset.begin(), subset.end());
  for (int label : in_subset)
    if (label < 1 || label > n) throw ValidationError("subset label out of range");
  std::vector<int> legs(n, 1);
  for (int label : subset) legs[label - 1] = 0;
  return WeightedGraph::make({0, g}, {{0, 1}}, std::move(legs));
}

}  // namespace tropmod
