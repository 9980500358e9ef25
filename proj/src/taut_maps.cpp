#include "tropmod/taut_maps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tropmod {

namespace {

// Mutable curve state threaded through the reduction loop. Legs carry their
// original labels so zero-weight legs can be tracked and finally removed.
struct Working {
  std::vector<int> genus;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> leg_roots;
  std::vector<int> leg_labels;  // 1-based original labels, parallel to leg_roots
  std::vector<ExtRational> lengths;
  std::vector<std::vector<int>> orig;  // per edge: input edge indices folded in

  WeightedGraph graph_with_label_order() const {
    // Rebuild leg_roots indexed by label rank (labels need not be 1..k here;
    // callers relabel first when they dropped legs).
    std::vector<std::pair<int, int>> by_label;
    for (size_t i = 0; i < leg_labels.size(); ++i)
      by_label.emplace_back(leg_labels[i], leg_roots[i]);
    std::sort(by_label.begin(), by_label.end());
    std::vector<int> roots;
    for (auto& [label, root] : by_label) roots.push_back(root);
    return WeightedGraph::make(genus, edges, roots);
  }

  void remove_vertex(int v) {
    genus.erase(genus.begin() + v);
    auto shift = [v](int u) { return u > v ? u - 1 : u; };
    for (auto& e : edges) e = {shift(e.first), shift(e.second)};
    for (auto& r : leg_roots) r = shift(r);
  }

  void remove_edge(int e) {
    edges.erase(edges.begin() + e);
    lengths.erase(lengths.begin() + e);
    orig.erase(orig.begin() + e);
  }
};

int working_valence(const Working& w, int v) {
  int count = 0;
  for (const auto& e : w.edges) {
    if (e.first == v) ++count;
    if (e.second == v) ++count;
  }
  return count;
}

// b indexed by original label - 1; zero entries mark legs being forgotten.
Rational working_leg_weight(const Working& w, int v, const std::vector<Rational>& b) {
  Rational total(0);
  for (size_t i = 0; i < w.leg_roots.size(); ++i)
    if (w.leg_roots[i] == v) total += b[w.leg_labels[i] - 1];
  return total;
}

// Applies leaf contractions and two-valent smoothings until every vertex is
// stable for the (possibly zero-extended) weights b. Returns the working
// state pre-canonicalization.
Working reduce_impl(const TropicalCurve& input, const std::vector<Rational>& b) {
  Working w;
  w.genus = input.graph.genus_labels;
  w.edges = input.graph.edges;
  w.leg_roots = input.graph.leg_roots;
  w.leg_labels.resize(input.graph.leg_count());
  std::iota(w.leg_labels.begin(), w.leg_labels.end(), 1);
  w.lengths = input.lengths;
  w.orig.resize(w.edges.size());
  for (size_t e = 0; e < w.edges.size(); ++e) w.orig[e] = {static_cast<int>(e)};

  while (true) {
    WeightedGraph current = WeightedGraph::make(w.genus, w.edges, w.leg_roots);
    std::vector<int> rank = canonical_form(current).vertex_to_canonical;

    int fire_vertex = -1;
    int fire_case = 0;
    for (int v = 0; v < current.vertex_count(); ++v) {
      if (w.genus[v] != 0) continue;
      int valence = working_valence(w, v);
      Rational bw = working_leg_weight(w, v, b);
      int which = 0;
      if (valence == 1 && bw <= Rational(1)) which = 1;
      if (valence == 2 && bw.sign() == 0) which = 2;
      if (which && (fire_vertex == -1 || rank[v] < rank[fire_vertex])) {
        fire_vertex = v;
        fire_case = which;
      }
    }
    if (fire_vertex == -1) break;
    const int v = fire_vertex;

    if (fire_case == 1) {
      int e = -1;
      for (size_t i = 0; i < w.edges.size(); ++i)
        if (w.edges[i].first == v || w.edges[i].second == v) {
          e = static_cast<int>(i);
          break;
        }
      if (w.edges[e].first == w.edges[e].second)
        throw InternalError("leaf contraction hit a loop");
      int u = w.edges[e].first == v ? w.edges[e].second : w.edges[e].first;
      for (size_t i = 0; i < w.leg_roots.size(); ++i)
        if (w.leg_roots[i] == v) w.leg_roots[i] = u;
      w.remove_edge(e);
      w.remove_vertex(v);
    } else {
      std::vector<int> incident;
      for (size_t i = 0; i < w.edges.size(); ++i) {
        if (w.edges[i].first == v) incident.push_back(static_cast<int>(i));
        if (w.edges[i].second == v) incident.push_back(static_cast<int>(i));
      }
      if (incident.size() != 2 || incident[0] == incident[1])
        throw InternalError("two-valent smoothing hit a loop");
      int e1 = incident[0], e2 = incident[1];
      int u1 = w.edges[e1].first == v ? w.edges[e1].second : w.edges[e1].first;
      int u2 = w.edges[e2].first == v ? w.edges[e2].second : w.edges[e2].first;
      ExtRational merged_len = w.lengths[e1] + w.lengths[e2];
      std::vector<int> merged_orig = w.orig[e1];
      merged_orig.insert(merged_orig.end(), w.orig[e2].begin(), w.orig[e2].end());
      std::sort(merged_orig.begin(), merged_orig.end());

      // Any legs still at v have weight zero; they vanish with the vertex.
      for (size_t i = w.leg_roots.size(); i-- > 0;) {
        if (w.leg_roots[i] != v) continue;
        if (b[w.leg_labels[i] - 1].sign() != 0)
          throw InternalError("smoothing a vertex with positively weighted legs");
        w.leg_roots.erase(w.leg_roots.begin() + i);
        w.leg_labels.erase(w.leg_labels.begin() + i);
      }
      w.remove_edge(std::max(e1, e2));
      w.remove_edge(std::min(e1, e2));
      w.edges.emplace_back(std::min(u1, u2), std::max(u1, u2));
      w.lengths.push_back(merged_len);
      w.orig.push_back(std::move(merged_orig));
      w.remove_vertex(v);
    }
  }

  // The loop's exit condition is exactly b-stability of every vertex.
  for (size_t v = 0; v < w.genus.size(); ++v) {
    Rational c(2 * w.genus[v] - 2 + working_valence(w, static_cast<int>(v)));
    c += working_leg_weight(w, static_cast<int>(v), b);
    if (c.sign() <= 0) throw InternalError("reduction terminated on an unstable vertex");
  }
  return w;
}

void check_reduction_inputs(const TropicalCurve& curve, const WeightData& a,
                            const WeightData& b) {
  if (a.leg_count() != b.leg_count())
    throw ValidationError("reduction weights must have equal arity");
  if (!a.dominates(b))
    throw ValidationError("target weights must be dominated componentwise");
  if (a.g != b.g) throw ValidationError("reduction weights must share the genus");
  if (!is_stable(curve.graph, a))
    throw ValidationError("input graph is not stable for the source weights");
}

// Canonicalizes the worked state (legs assumed labeled 1..k) and assembles
// the report against the input curve.
ReduceResult finalize(const TropicalCurve& input, Working w, bool extended) {
  WeightedGraph plain = w.graph_with_label_order();
  CanonicalForm c = canonical_form(plain);
  std::vector<ExtRational> lengths(w.lengths.size());
  for (size_t e = 0; e < w.lengths.size(); ++e)
    lengths[c.edge_to_canonical[e]] = w.lengths[e];

  MapReport report;
  report.input_class = canonical_form(input.graph).key;
  report.output_class = c.key;
  report.edges.assign(input.graph.edge_count(), {});
  for (auto& t : report.edges) t.fate = MapReport::Fate::Dropped;
  for (size_t e = 0; e < w.orig.size(); ++e) {
    for (int src : w.orig[e]) {
      auto& t = report.edges[src];
      t.fate = w.orig[e].size() == 1 ? MapReport::Fate::Kept : MapReport::Fate::Merged;
      t.output_edge = c.edge_to_canonical[e];
      for (int other : w.orig[e])
        if (other != src) t.merged_with.push_back(other);
    }
  }

  return ReduceResult{TropicalCurve::make(std::move(c.graph), std::move(lengths), extended),
                      std::move(report)};
}

}  // namespace

ReduceResult reduce_curve(const TropicalCurve& curve, const WeightData& a,
                          const WeightData& b) {
  check_reduction_inputs(curve, a, b);
  std::vector<Rational> bw = b.weights;
  Working w = reduce_impl(curve, bw);
  if (w.leg_labels.size() != static_cast<size_t>(b.leg_count()))
    throw InternalError("reduction dropped a positively weighted leg");
  ReduceResult out = finalize(curve, std::move(w), curve.extended);
  if (!is_stable(out.curve.graph, b))
    throw InternalError("reduction output is not stable for the target weights");
  return out;
}

WeightedGraph reduce_graph(const WeightedGraph& g, const WeightData& a,
                           const WeightData& b) {
  TropicalCurve curve = TropicalCurve::make(
      g, std::vector<ExtRational>(g.edge_count(), ExtRational(Rational(1))), false);
  return reduce_curve(curve, a, b).curve.graph;
}

TropicalCurve forget(const TropicalCurve& curve, const WeightData& a,
                     const std::vector<int>& keep_labels) {
  std::set<int> keep(keep_labels.begin(), keep_labels.end());
  if (keep.size() != keep_labels.size()) throw ValidationError("duplicate kept leg label");
  for (int label : keep)
    if (label < 1 || label > a.leg_count())
      throw ValidationError("kept leg label " + std::to_string(label) + " out of range");
  if (a.leg_count() != curve.graph.leg_count())
    throw ValidationError("weight datum arity does not match the curve");
  if (!is_stable(curve.graph, a))
    throw ValidationError("input graph is not stable for the source weights");

  std::vector<Rational> kept_weights;
  for (int label = 1; label <= a.leg_count(); ++label)
    if (keep.count(label)) kept_weights.push_back(a.weights[label - 1]);
  if (auto err = weight_data_error(a.g, kept_weights); !err.empty())
    throw ValidationError("retained weights are not a valid datum: " + err);
  WeightData restricted = WeightData::make(a.g, kept_weights);

  std::vector<Rational> zeroed(a.leg_count(), Rational(0));
  for (int label : keep) zeroed[label - 1] = a.weights[label - 1];

  Working w = reduce_impl(curve, zeroed);

  // Delete the forgotten legs that survived the reduction, then renumber the
  // kept ones 1..r preserving label order.
  for (size_t i = w.leg_labels.size(); i-- > 0;) {
    if (keep.count(w.leg_labels[i])) continue;
    w.leg_roots.erase(w.leg_roots.begin() + i);
    w.leg_labels.erase(w.leg_labels.begin() + i);
  }
  std::vector<int> sorted_kept(keep.begin(), keep.end());
  for (auto& label : w.leg_labels)
    label = static_cast<int>(std::lower_bound(sorted_kept.begin(), sorted_kept.end(),
                                              label) -
                             sorted_kept.begin()) +
            1;

  TropicalCurve out = finalize(curve, std::move(w), curve.extended).curve;
  if (!is_stable(out.graph, restricted))
    throw InternalError("forgetful output is not stable for the retained weights");
  return out;
}

namespace {

// Flag slots at v in deterministic order: (edge index, side). A loop at v
// owns two slots.
std::vector<std::pair<int, int>> flag_slots(const WeightedGraph& g, int v) {
  std::vector<std::pair<int, int>> slots;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edges[e].first == v) slots.emplace_back(e, 0);
    if (g.edges[e].second == v) slots.emplace_back(e, 1);
  }
  return slots;
}

}  // namespace

TropicalCurve clutch_over(const WeightedGraph& g, const WeightData& datum,
                          const std::vector<TropicalCurve>& parts) {
  if (!is_stable(g, datum))
    throw ValidationError("clutching graph is not stable for the datum");
  if (static_cast<int>(parts.size()) != g.vertex_count())
    throw ValidationError("need exactly one part per vertex");

  // Per-vertex leg labels (sorted) and flag slots; validate each part.
  std::vector<std::vector<int>> legs_at(g.vertex_count());
  for (int i = 0; i < g.leg_count(); ++i) legs_at[g.leg_roots[i]].push_back(i + 1);
  std::vector<std::vector<std::pair<int, int>>> slots_at(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    slots_at[v] = flag_slots(g, v);
    int n_v = static_cast<int>(legs_at[v].size() + slots_at[v].size());
    if (parts[v].graph.leg_count() != n_v)
      throw ValidationError("part for vertex " + std::to_string(v) + " must have " +
                            std::to_string(n_v) + " legs");
    std::vector<Rational> part_weights;
    for (int label : legs_at[v]) part_weights.push_back(datum.weights[label - 1]);
    part_weights.insert(part_weights.end(), slots_at[v].size(), Rational(1));
    WeightData part_datum = WeightData::make(g.genus_labels[v], std::move(part_weights));
    if (!is_stable(parts[v].graph, part_datum))
      throw ValidationError("part for vertex " + std::to_string(v) +
                            " is not stable for its induced datum");
  }

  // Disjoint union.
  std::vector<int> offset(g.vertex_count(), 0);
  for (int v = 1; v < g.vertex_count(); ++v)
    offset[v] = offset[v - 1] + parts[v - 1].graph.vertex_count();
  std::vector<int> genus;
  std::vector<std::pair<int, int>> edges;
  std::vector<ExtRational> lengths;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int h : parts[v].graph.genus_labels) genus.push_back(h);
    for (int e = 0; e < parts[v].graph.edge_count(); ++e) {
      edges.emplace_back(parts[v].graph.edges[e].first + offset[v],
                         parts[v].graph.edges[e].second + offset[v]);
      lengths.push_back(parts[v].lengths[e]);
    }
  }

  // Root of the part leg bound to flag slot j of vertex v.
  auto slot_root = [&](int v, int j) {
    int leg_index = static_cast<int>(legs_at[v].size()) + j;  // 0-based in part v
    return parts[v].graph.leg_roots[leg_index] + offset[v];
  };
  // A bridge at infinity for every edge of g.
  for (int e = 0; e < g.edge_count(); ++e) {
    int a = g.edges[e].first, b = g.edges[e].second;
    int ja = -1, jb = -1;
    for (size_t j = 0; j < slots_at[a].size(); ++j)
      if (slots_at[a][j] == std::make_pair(e, 0)) ja = static_cast<int>(j);
    for (size_t j = 0; j < slots_at[b].size(); ++j)
      if (slots_at[b][j] == std::make_pair(e, 1)) jb = static_cast<int>(j);
    if (ja < 0 || jb < 0) throw InternalError("edge flag slot not found");
    edges.emplace_back(slot_root(a, ja), slot_root(b, jb));
    lengths.push_back(ExtRational::infinity());
  }

  // Global legs: part leg p of vertex v carries the p-th smallest label at v.
  std::vector<int> leg_roots(g.leg_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (size_t p = 0; p < legs_at[v].size(); ++p)
      leg_roots[legs_at[v][p] - 1] = parts[v].graph.leg_roots[p] + offset[v];

  WeightedGraph merged = WeightedGraph::make(std::move(genus), std::move(edges),
                                             std::move(leg_roots));
  if (!is_stable(merged, datum))
    throw InternalError("clutched curve is not stable for the ambient datum");

  CanonicalForm c = canonical_form(merged);
  std::vector<ExtRational> canon_lengths(lengths.size());
  for (size_t e = 0; e < lengths.size(); ++e)
    canon_lengths[c.edge_to_canonical[e]] = lengths[e];
  return TropicalCurve::make(std::move(c.graph), std::move(canon_lengths), true);
}

TropicalCurve clutch_pair(const TropicalCurve& c1, const WeightData& d1,
                          const TropicalCurve& c2, const WeightData& d2) {
  if (d1.leg_count() < 1 || d1.weights.back() != Rational(1) || d2.leg_count() < 1 ||
      d2.weights.back() != Rational(1))
    throw ValidationError("clutching data must end in a weight-1 leg");
  if (!is_stable(c1.graph, d1) || !is_stable(c2.graph, d2))
    throw ValidationError("clutching inputs must be stable for their data");

  int n1 = d1.leg_count() - 1, n2 = d2.leg_count() - 1;
  std::vector<Rational> weights;
  for (int i = 0; i < n1; ++i) weights.push_back(d1.weights[i]);
  for (int i = 0; i < n2; ++i) weights.push_back(d2.weights[i]);
  WeightData joined = WeightData::make(d1.g + d2.g, std::move(weights));

  // The defining graph: two vertices joined by one edge with the legs split.
  std::vector<int> legs(n1 + n2, 0);
  for (int i = 0; i < n2; ++i) legs[n1 + i] = 1;
  WeightedGraph shape =
      WeightedGraph::make({d1.g, d2.g}, {{0, 1}}, std::move(legs));
  return clutch_over(shape, joined, {c1, c2});
}

TropicalCurve glue_last_legs(const TropicalCurve& curve, const WeightData& datum) {
  if (datum.leg_count() < 2 || datum.weights.back() != Rational(1) ||
      datum.weights[datum.leg_count() - 2] != Rational(1))
    throw ValidationError("gluing datum must end in two weight-1 legs");
  if (!is_stable(curve.graph, datum))
    throw ValidationError("gluing input must be stable for its datum");

  int n = datum.leg_count() - 2;
  std::vector<Rational> weights(datum.weights.begin(), datum.weights.begin() + n);
  WeightData glued = WeightData::make(datum.g + 1, std::move(weights));

  // The defining graph: one vertex with a loop carrying all remaining legs.
  WeightedGraph shape = WeightedGraph::make({datum.g}, {{0, 0}}, std::vector<int>(n, 0));
  return clutch_over(shape, glued, {curve});
}

SectionEmbedding reduction_section(const WeightData& a, const WeightData& b) {
  if (a.leg_count() != b.leg_count())
    throw ValidationError("section weights must have equal arity");
  if (a.g != b.g) throw ValidationError("section weights must share the genus");
  if (!a.dominates(b))
    throw ValidationError("section requires componentwise domination");

  SectionEmbedding out{a, b, enumerate_stable_graphs(a), enumerate_stable_graphs(b), {}};
  out.b_to_a.resize(out.catalog_b.total());
  for (int layer = 0; layer < static_cast<int>(out.catalog_b.layers.size()); ++layer) {
    for (int pos = 0; pos < static_cast<int>(out.catalog_b.layers[layer].size()); ++pos) {
      const std::string& key = out.catalog_b.layers[layer][pos].key;
      auto it = out.catalog_a.index.find(key);
      if (it == out.catalog_a.index.end())
        throw InternalError("B-stable class missing from the A-catalog");
      out.b_to_a[out.catalog_b.flat_id(layer, pos)] =
          out.catalog_a.flat_id(it->second.first, it->second.second);
    }
  }
  return out;
}

}  // namespace tropmod
