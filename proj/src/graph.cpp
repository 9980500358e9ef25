#include "tropmod/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tropmod {

namespace {

// Union-find over vertex ids, used by validation and contraction.
struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

WeightedGraph WeightedGraph::make(std::vector<int> genus_labels,
                                  std::vector<std::pair<int, int>> edges,
                                  std::vector<int> leg_roots) {
  const int n_vertices = static_cast<int>(genus_labels.size());
  if (n_vertices == 0) throw ValidationError("graph must have at least one vertex");
  for (size_t v = 0; v < genus_labels.size(); ++v)
    if (genus_labels[v] < 0)
      throw ValidationError("negative genus label at vertex " + std::to_string(v));
  for (auto& e : edges) {
    if (e.first < 0 || e.first >= n_vertices || e.second < 0 || e.second >= n_vertices)
      throw ValidationError("edge endpoint out of range");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  for (size_t i = 0; i < leg_roots.size(); ++i)
    if (leg_roots[i] < 0 || leg_roots[i] >= n_vertices)
      throw ValidationError("leg " + std::to_string(i + 1) + " root out of range");

  UnionFind uf(n_vertices);
  for (const auto& e : edges) uf.unite(e.first, e.second);
  for (int v = 1; v < n_vertices; ++v)
    if (uf.find(v) != uf.find(0)) throw ValidationError("graph is not connected");

  return WeightedGraph{std::move(genus_labels), std::move(edges), std::move(leg_roots)};
}

int genus(const WeightedGraph& g) {
  int total = g.edge_count() - g.vertex_count() + 1;
  for (int h : g.genus_labels) total += h;
  return total;
}

int edge_valence(const WeightedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw ValidationError("unknown vertex " + std::to_string(v));
  int count = 0;
  for (const auto& e : g.edges) {
    if (e.first == v) ++count;
    if (e.second == v) ++count;
  }
  return count;
}

Rational leg_weight(const WeightedGraph& g, int v, const WeightData& datum) {
  if (v < 0 || v >= g.vertex_count())
    throw ValidationError("unknown vertex " + std::to_string(v));
  if (datum.leg_count() != g.leg_count())
    throw ValidationError("weight datum has " + std::to_string(datum.leg_count()) +
                          " weights but graph has " + std::to_string(g.leg_count()) +
                          " legs");
  Rational total(0);
  for (int i = 0; i < g.leg_count(); ++i)
    if (g.leg_roots[i] == v) total += datum.weights[i];
  return total;
}

std::vector<Rational> canonical_divisor(const WeightedGraph& g, const WeightData& datum) {
  if (datum.leg_count() != g.leg_count())
    throw ValidationError("weight datum arity does not match leg count");
  std::vector<Rational> coeff(g.vertex_count(), Rational(0));
  for (int v = 0; v < g.vertex_count(); ++v)
    coeff[v] = Rational(2 * g.genus_labels[v] - 2 + edge_valence(g, v));
  for (int i = 0; i < g.leg_count(); ++i) coeff[g.leg_roots[i]] += datum.weights[i];
  return coeff;
}

bool is_stable(const WeightedGraph& g, const WeightData& datum) {
  if (genus(g) != datum.g) return false;
  for (const auto& c : canonical_divisor(g, datum))
    if (c.sign() <= 0) return false;
  return true;
}

std::pair<WeightedGraph, ContractionMap> contract(const WeightedGraph& g,
                                                  const std::set<int>& to_contract) {
  for (int e : to_contract)
    if (e < 0 || e >= g.edge_count())
      throw ValidationError("edge " + std::to_string(e) + " not in graph");

  UnionFind uf(g.vertex_count());
  for (int e : to_contract) uf.unite(g.edges[e].first, g.edges[e].second);

  // New ids in order of first appearance of each class representative.
  std::vector<int> vertex_map(g.vertex_count(), -1);
  int next_id = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int root = uf.find(v);
    if (vertex_map[root] == -1) vertex_map[root] = next_id++;
    vertex_map[v] = vertex_map[root];
  }

  // Genus of each preimage subgraph: labels plus contracted-edge Betti number.
  std::vector<int> new_genus(next_id, 0);
  std::vector<int> class_size(next_id, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    new_genus[vertex_map[v]] += g.genus_labels[v];
    class_size[vertex_map[v]] += 1;
  }
  std::vector<int> contracted_in_class(next_id, 0);
  for (int e : to_contract) contracted_in_class[vertex_map[g.edges[e].first]] += 1;
  for (int c = 0; c < next_id; ++c)
    new_genus[c] += contracted_in_class[c] - class_size[c] + 1;

  std::vector<std::pair<int, int>> new_edges;
  std::vector<int> edge_map(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (to_contract.count(e)) continue;
    edge_map[e] = static_cast<int>(new_edges.size());
    new_edges.emplace_back(vertex_map[g.edges[e].first], vertex_map[g.edges[e].second]);
  }

  std::vector<int> new_legs(g.leg_count());
  for (int i = 0; i < g.leg_count(); ++i) new_legs[i] = vertex_map[g.leg_roots[i]];

  WeightedGraph out =
      WeightedGraph::make(std::move(new_genus), std::move(new_edges), std::move(new_legs));
  return {std::move(out), ContractionMap{std::move(vertex_map), std::move(edge_map),
                                         to_contract}};
}

WeightedGraph single_vertex_graph(int g, int n) {
  return WeightedGraph::make({g}, {}, std::vector<int>(n, 0));
}

}  // namespace tropmod
