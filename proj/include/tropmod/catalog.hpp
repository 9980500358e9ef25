#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropmod/canonical.hpp"
#include "tropmod/graph.hpp"
#include "tropmod/weight_data.hpp"

namespace tropmod {

// One isomorphism class of stable graphs: the canonical representative and
// its canonical key.
struct CatalogEntry {
  WeightedGraph graph;
  std::string key;
};

// All isomorphism classes of (g,A)-stable weighted graphs, layered by edge
// count. Layers are sorted by canonical key, so the catalog is bit-identical
// across runs and worker counts.
struct StableGraphCatalog {
  WeightData datum;
  std::vector<std::vector<CatalogEntry>> layers;
  std::map<std::string, std::pair<int, int>> index;  // key -> (layer, position)

  int max_edges() const { return static_cast<int>(layers.size()) - 1; }
  int total() const;
  // Flat id: layers concatenated in order.
  int flat_id(int layer, int pos) const;
  std::pair<int, int> layer_pos(int flat) const;
  const CatalogEntry& entry(int flat) const;
  const CatalogEntry* find(const std::string& key) const;
};

// Enumerates every stability class by reverse contraction from the
// one-vertex graph: layer e+1 is generated from layer e by vertex splitting
// and by genus-reducing loop insertion, deduplicated by canonical form.
// Generation halts on the first empty layer; no edge-count bound is used for
// pruning.
StableGraphCatalog enumerate_stable_graphs(const WeightData& datum);

// Serial reference driver; produces a catalog identical to the parallel one.
StableGraphCatalog enumerate_stable_graphs_serial(const WeightData& datum);

// All reverse-contraction children of one parent (the per-parent kernel both
// drivers share). Returns deduplicated canonical forms.
std::vector<CanonicalForm> expand_parent(const WeightedGraph& parent,
                                         const WeightData& datum);

// Cover relations of the contraction order: `from` has one more edge than
// `to`, and contracting a single edge of `from` yields `to`.
struct CoverRelation {
  int from_layer, from_pos;
  int to_layer, to_pos;
  auto operator<=>(const CoverRelation&) const = default;
};

struct ContractionPoset {
  std::vector<CoverRelation> covers;  // sorted, deduplicated
};

// Locates every single-edge contraction of every catalog graph in the
// catalog. A missing contraction is an internal-consistency error.
ContractionPoset contraction_poset(const StableGraphCatalog& catalog);

}  // namespace tropmod
