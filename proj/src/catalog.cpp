#include "tropmod/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropmod {

namespace {

// Safety stop well above the theoretical 3g-3+n layer bound; reaching it
// means the generator is broken, not that the space is large.
int runaway_layer_cap(const WeightData& datum) {
  return 3 * datum.g + datum.leg_count() + 8;
}

// Splits of vertex v: a new edge v1-v2, the genus distributed, each leg and
// each edge flag at v reattached to one side. A loop at v can stay on either
// side or be torn into a second v1-v2 edge.
void expand_splits(const WeightedGraph& parent, const WeightData& datum, int v,
                   std::vector<WeightedGraph>& out) {
  const int h = parent.genus_labels[v];

  std::vector<int> legs_at_v;
  for (int i = 0; i < parent.leg_count(); ++i)
    if (parent.leg_roots[i] == v) legs_at_v.push_back(i);
  std::vector<int> plain_flags;  // non-loop edges with one endpoint at v
  std::vector<int> loops_at_v;
  for (int e = 0; e < parent.edge_count(); ++e) {
    if (parent.edges[e].first == v && parent.edges[e].second == v)
      loops_at_v.push_back(e);
    else if (parent.edges[e].first == v || parent.edges[e].second == v)
      plain_flags.push_back(e);
  }

  const int n_legs = static_cast<int>(legs_at_v.size());
  const int n_flags = static_cast<int>(plain_flags.size());
  const int n_loops = static_cast<int>(loops_at_v.size());
  long loop_choices = 1;
  for (int i = 0; i < n_loops; ++i) loop_choices *= 3;

  const int v1 = v;
  const int v2 = parent.vertex_count();

  for (int h1 = 0; h1 <= h; ++h1) {
    for (long leg_mask = 0; leg_mask < (1L << n_legs); ++leg_mask) {
      for (long flag_mask = 0; flag_mask < (1L << n_flags); ++flag_mask) {
        for (long loop_code = 0; loop_code < loop_choices; ++loop_code) {
          std::vector<int> genus = parent.genus_labels;
          genus[v1] = h1;
          genus.push_back(h - h1);

          std::vector<int> legs = parent.leg_roots;
          for (int i = 0; i < n_legs; ++i)
            if (leg_mask & (1L << i)) legs[legs_at_v[i]] = v2;

          std::vector<std::pair<int, int>> edges = parent.edges;
          for (int i = 0; i < n_flags; ++i) {
            if (!(flag_mask & (1L << i))) continue;
            auto& e = edges[plain_flags[i]];
            if (e.first == v) e.first = v2;
            else e.second = v2;
          }
          long code = loop_code;
          for (int i = 0; i < n_loops; ++i) {
            int choice = code % 3;
            code /= 3;
            auto& e = edges[loops_at_v[i]];
            if (choice == 1) e = {v2, v2};
            else if (choice == 2) e = {v1, v2};
          }
          edges.emplace_back(v1, v2);

          WeightedGraph child =
              WeightedGraph::make(std::move(genus), std::move(edges), std::move(legs));
          // Only the two halves changed; check their stability directly.
          auto ok = [&](int u) {
            Rational c(2 * child.genus_labels[u] - 2 + edge_valence(child, u));
            c += leg_weight(child, u, datum);
            return c.sign() > 0;
          };
          if (ok(v1) && ok(v2)) out.push_back(std::move(child));
        }
      }
    }
  }
}

void expand_loop_insertions(const WeightedGraph& parent, int v,
                            std::vector<WeightedGraph>& out) {
  if (parent.genus_labels[v] < 1) return;
  std::vector<int> genus = parent.genus_labels;
  genus[v] -= 1;
  std::vector<std::pair<int, int>> edges = parent.edges;
  edges.emplace_back(v, v);
  // Stability at v is unchanged: the genus drop and the two new flags cancel.
  out.push_back(WeightedGraph::make(std::move(genus), std::move(edges), parent.leg_roots));
}

StableGraphCatalog assemble(const WeightData& datum,
                            std::vector<std::vector<CatalogEntry>> layers) {
  StableGraphCatalog cat;
  cat.datum = datum;
  cat.layers = std::move(layers);
  for (int l = 0; l < static_cast<int>(cat.layers.size()); ++l)
    for (int p = 0; p < static_cast<int>(cat.layers[l].size()); ++p)
      cat.index.emplace(cat.layers[l][p].key, std::make_pair(l, p));
  return cat;
}

std::vector<CatalogEntry> merge_children(std::vector<CanonicalForm> children) {
  std::sort(children.begin(), children.end(),
            [](const CanonicalForm& a, const CanonicalForm& b) { return a.key < b.key; });
  std::vector<CatalogEntry> layer;
  for (auto& c : children) {
    if (!layer.empty() && layer.back().key == c.key) continue;
    layer.push_back(CatalogEntry{std::move(c.graph), std::move(c.key)});
  }
  return layer;
}

template <typename ExpandLayer>
StableGraphCatalog enumerate_with(const WeightData& datum, ExpandLayer&& expand_layer) {
  std::vector<std::vector<CatalogEntry>> layers;
  {
    CanonicalForm base = canonical_form(single_vertex_graph(datum.g, datum.leg_count()));
    layers.push_back({CatalogEntry{std::move(base.graph), std::move(base.key)}});
  }
  const int cap = runaway_layer_cap(datum);
  while (true) {
    std::vector<CatalogEntry> next = merge_children(expand_layer(layers.back()));
    if (next.empty()) break;
    layers.push_back(std::move(next));
    if (static_cast<int>(layers.size()) > cap)
      throw InternalError("stable graph generation exceeded the layer cap");
  }
  return assemble(datum, std::move(layers));
}

}  // namespace

std::vector<CanonicalForm> expand_parent(const WeightedGraph& parent,
                                         const WeightData& datum) {
  std::vector<WeightedGraph> raw;
  for (int v = 0; v < parent.vertex_count(); ++v) {
    expand_splits(parent, datum, v, raw);
    expand_loop_insertions(parent, v, raw);
  }
  std::vector<CanonicalForm> out;
  out.reserve(raw.size());
  std::set<std::string> seen;
  for (const auto& g : raw) {
    CanonicalForm c = canonical_form(g);
    if (seen.insert(c.key).second) out.push_back(std::move(c));
  }
  return out;
}

StableGraphCatalog enumerate_stable_graphs_serial(const WeightData& datum) {
  return enumerate_with(datum, [&](const std::vector<CatalogEntry>& parents) {
    std::vector<CanonicalForm> children;
    for (const auto& p : parents) {
      auto mine = expand_parent(p.graph, datum);
      children.insert(children.end(), std::make_move_iterator(mine.begin()),
                      std::make_move_iterator(mine.end()));
    }
    return children;
  });
}

StableGraphCatalog enumerate_stable_graphs(const WeightData& datum) {
  return enumerate_with(datum, [&](const std::vector<CatalogEntry>& parents) {
    const int count = static_cast<int>(parents.size());
    std::vector<std::vector<CanonicalForm>> per_parent(count);
    bool failed = false;
    std::string error;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
      try {
        per_parent[i] = expand_parent(parents[i].graph, datum);
      } catch (const std::exception& e) {
#pragma omp critical
        {
          failed = true;
          error = e.what();
        }
      }
    }
    if (failed) throw InternalError("parallel layer expansion failed: " + error);
    std::vector<CanonicalForm> children;
    for (auto& part : per_parent)
      children.insert(children.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    return children;
  });
}

int StableGraphCatalog::total() const {
  int t = 0;
  for (const auto& l : layers) t += static_cast<int>(l.size());
  return t;
}

int StableGraphCatalog::flat_id(int layer, int pos) const {
  int id = pos;
  for (int l = 0; l < layer; ++l) id += static_cast<int>(layers[l].size());
  return id;
}

std::pair<int, int> StableGraphCatalog::layer_pos(int flat) const {
  for (int l = 0; l < static_cast<int>(layers.size()); ++l) {
    if (flat < static_cast<int>(layers[l].size())) return {l, flat};
    flat -= static_cast<int>(layers[l].size());
  }
  throw InternalError("flat catalog id out of range");
}

const CatalogEntry& StableGraphCatalog::entry(int flat) const {
  auto [l, p] = layer_pos(flat);
  return layers[l][p];
}

const CatalogEntry* StableGraphCatalog::find(const std::string& key) const {
  auto it = index.find(key);
  if (it == index.end()) return nullptr;
  return &layers[it->second.first][it->second.second];
}

ContractionPoset contraction_poset(const StableGraphCatalog& catalog) {
  std::set<CoverRelation> covers;
  for (int layer = 1; layer < static_cast<int>(catalog.layers.size()); ++layer) {
    for (int pos = 0; pos < static_cast<int>(catalog.layers[layer].size()); ++pos) {
      const WeightedGraph& g = catalog.layers[layer][pos].graph;
      for (int e = 0; e < g.edge_count(); ++e) {
        auto [contracted, cmap] = contract(g, {e});
        CanonicalForm c = canonical_form(contracted);
        auto it = catalog.index.find(c.key);
        if (it == catalog.index.end())
          throw InternalError("contraction of a catalog graph is missing from the catalog");
        covers.insert(CoverRelation{layer, pos, it->second.first, it->second.second});
      }
    }
  }
  return ContractionPoset{std::vector<CoverRelation>(covers.begin(), covers.end())};
}

}  // namespace tropmod
