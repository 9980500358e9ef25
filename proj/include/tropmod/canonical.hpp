#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmod/graph.hpp"

namespace tropmod {

// Result of canonical labeling. `key` is a deterministic byte string with
// key(G1) == key(G2) iff G1 and G2 are isomorphic as weighted graphs with
// legs (legs matched by label, vertices by genus, edges by incidence).
// vertex_to_canonical / edge_to_canonical give the relabeling into
// `graph`, whose vertices are 0..V-1 in canonical order and whose edge list
// is sorted. For parallel edges the slot assignment among equal pairs is an
// arbitrary-but-deterministic choice; the residual ambiguity is exactly an
// automorphism, which every consumer quotients out.
struct CanonicalForm {
  std::string key;
  std::vector<int> vertex_to_canonical;
  std::vector<int> edge_to_canonical;
  WeightedGraph graph;
};

CanonicalForm canonical_form(const WeightedGraph& g);

// One automorphism, stored as a compatible (vertex, edge) permutation pair.
struct VertexEdgePerm {
  std::vector<int> vertex_perm;
  std::vector<int> edge_perm;
  bool operator==(const VertexEdgePerm& o) const = default;
  bool operator<(const VertexEdgePerm& o) const {
    if (vertex_perm != o.vertex_perm) return vertex_perm < o.vertex_perm;
    return edge_perm < o.edge_perm;
  }
};

// Automorphisms of a weighted graph with all legs fixed pointwise.
//
// `order` is the flag-faithful group order: the (vertex, edge)-pair group
// extended by the independent flips of each loop's two flags, i.e.
// order = pair_order * 2^#loops. Only the edge action matters for cone
// coordinates, so the group is stored as pairs and the flag count enters
// through the formula; `edge_action` is the full image of the group on edge
// indices, deduplicated and sorted.
struct AutomorphismGroup {
  std::vector<VertexEdgePerm> generators;  // minimal-ish generating set of the pair group
  unsigned long long order = 1;            // flag-faithful
  unsigned long long pair_order = 1;       // (vertex, edge)-pair group
  std::vector<std::vector<int>> edge_action;

  unsigned long long edge_action_order() const { return edge_action.size(); }
};

AutomorphismGroup automorphisms(const WeightedGraph& g);

// Explicit isomorphism: vertex_map[v] and edge_map[e] give images in the
// second graph. Legs correspond by label.
struct GraphIsomorphism {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

// Empty when the graphs are not isomorphic; otherwise one witness (the set
// of all isomorphisms is a torsor under either automorphism group).
std::optional<GraphIsomorphism> is_isomorphic(const WeightedGraph& a,
                                              const WeightedGraph& b);

}  // namespace tropmod
