#include "tropmod/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tropmod {

namespace {

// Comparable image of a graph under a complete labeling; the minimum over
// all refinement-compatible labelings is the canonical representative.
struct EncodedGraph {
  std::vector<int> genus;
  std::vector<std::pair<int, int>> edges;  // sorted, endpoints normalized
  std::vector<int> legs;

  auto operator<=>(const EncodedGraph&) const = default;
};

EncodedGraph encode_under(const WeightedGraph& g, const std::vector<int>& position) {
  EncodedGraph enc;
  enc.genus.assign(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) enc.genus[position[v]] = g.genus_labels[v];
  enc.edges.reserve(g.edge_count());
  for (const auto& e : g.edges) {
    int a = position[e.first], b = position[e.second];
    enc.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(enc.edges.begin(), enc.edges.end());
  enc.legs.reserve(g.leg_count());
  for (int r : g.leg_roots) enc.legs.push_back(position[r]);
  return enc;
}

// Color refinement driver: colors are dense ranks; signatures are built from
// ranks only, so the refinement is invariant under vertex relabeling.
class LabelingSearch {
public:
  explicit LabelingSearch(const WeightedGraph& g) : g_(g), n_(g.vertex_count()) {
    // Flag neighbors: one entry per edge flag at v, holding the far endpoint
    // (a loop contributes v itself, twice).
    flag_neighbors_.assign(n_, {});
    for (const auto& e : g.edges) {
      flag_neighbors_[e.first].push_back(e.second);
      flag_neighbors_[e.second].push_back(e.first);
    }
  }

  void run() {
    std::vector<int> colors = initial_colors();
    refine(colors);
    recurse(colors);
  }

  EncodedGraph best;
  std::vector<std::vector<int>> min_labelings;  // vertex -> canonical position

private:
  std::vector<int> initial_colors() const {
    // Key: (genus, exact leg-label set). Legs are fixed pointwise by every
    // automorphism, so vertices with different leg sets never mix.
    std::vector<std::pair<std::pair<int, std::vector<int>>, int>> keyed(n_);
    for (int v = 0; v < n_; ++v) keyed[v] = {{g_.genus_labels[v], {}}, v};
    for (int i = 0; i < g_.leg_count(); ++i)
      keyed[g_.leg_roots[i]].first.second.push_back(i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> colors(n_);
    int rank = -1;
    for (int i = 0; i < n_; ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) ++rank;
      colors[keyed[i].second] = rank;
    }
    return colors;
  }

  void refine(std::vector<int>& colors) const {
    while (true) {
      std::vector<std::pair<std::vector<int>, int>> sigs(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<int> sig;
        sig.reserve(flag_neighbors_[v].size() + 1);
        sig.push_back(colors[v]);
        for (int u : flag_neighbors_[v]) sig.push_back(colors[u]);
        std::sort(sig.begin() + 1, sig.end());
        sigs[v] = {std::move(sig), v};
      }
      std::sort(sigs.begin(), sigs.end());
      std::vector<int> next(n_);
      int rank = -1;
      for (int i = 0; i < n_; ++i) {
        if (i == 0 || sigs[i].first != sigs[i - 1].first) ++rank;
        next[sigs[i].second] = rank;
      }
      if (next == colors) return;
      colors = std::move(next);
    }
  }

  void recurse(const std::vector<int>& colors) {
    // Locate the first cell (smallest color) with more than one vertex.
    std::vector<int> cell_size(n_, 0);
    for (int c : colors) ++cell_size[c];
    int branch_color = -1;
    for (int c = 0; c < n_; ++c)
      if (cell_size[c] > 1) {
        branch_color = c;
        break;
      }

    if (branch_color == -1) {
      // Discrete: the color of each vertex is its canonical position.
      EncodedGraph enc = encode_under(g_, colors);
      if (min_labelings.empty() || enc < best) {
        best = std::move(enc);
        min_labelings.assign(1, colors);
      } else if (enc == best) {
        min_labelings.push_back(colors);
      }
      return;
    }

    for (int v = 0; v < n_; ++v) {
      if (colors[v] != branch_color) continue;
      std::vector<int> split(n_);
      for (int u = 0; u < n_; ++u)
        split[u] = colors[u] * 2 + ((colors[u] == branch_color && u != v) ? 1 : 0);
      // Re-rank to dense colors, then refine.
      std::vector<int> distinct(split);
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int u = 0; u < n_; ++u)
        split[u] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), split[u]) -
            distinct.begin());
      refine(split);
      recurse(split);
    }
  }

  const WeightedGraph& g_;
  int n_;
  std::vector<std::vector<int>> flag_neighbors_;
};

std::string encode_key(const EncodedGraph& enc) {
  std::ostringstream out;
  out << "V" << enc.genus.size() << "|h:";
  for (size_t i = 0; i < enc.genus.size(); ++i) out << (i ? "," : "") << enc.genus[i];
  out << "|e:";
  for (size_t i = 0; i < enc.edges.size(); ++i)
    out << (i ? "," : "") << enc.edges[i].first << "-" << enc.edges[i].second;
  out << "|l:";
  for (size_t i = 0; i < enc.legs.size(); ++i) out << (i ? "," : "") << enc.legs[i];
  return out.str();
}

// Deterministic edge relabeling into the sorted canonical edge list: among
// parallel edges, slots are filled in original index order.
std::vector<int> edge_relabeling(const WeightedGraph& g, const std::vector<int>& position,
                                 const std::vector<std::pair<int, int>>& sorted_edges) {
  std::map<std::pair<int, int>, std::vector<int>> slots;
  for (int i = 0; i < static_cast<int>(sorted_edges.size()); ++i)
    slots[sorted_edges[i]].push_back(i);
  std::map<std::pair<int, int>, size_t> used;
  std::vector<int> relabel(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    int a = position[g.edges[e].first], b = position[g.edges[e].second];
    std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    relabel[e] = slots[key][used[key]++];
  }
  return relabel;
}

constexpr unsigned long long kPairGroupCap = 4'000'000ULL;

}  // namespace

CanonicalForm canonical_form(const WeightedGraph& g) {
  LabelingSearch search(g);
  search.run();
  const EncodedGraph& enc = search.best;
  const std::vector<int>& position = search.min_labelings.front();

  CanonicalForm out;
  out.key = encode_key(enc);
  out.vertex_to_canonical = position;
  out.edge_to_canonical = edge_relabeling(g, position, enc.edges);
  out.graph = WeightedGraph::make(enc.genus, enc.edges, enc.legs);
  return out;
}

AutomorphismGroup automorphisms(const WeightedGraph& g) {
  LabelingSearch search(g);
  search.run();

  // Vertex-level group: composites of any two minimal labelings.
  const std::vector<int>& base = search.min_labelings.front();
  std::vector<int> base_inv(base.size());
  for (size_t v = 0; v < base.size(); ++v) base_inv[base[v]] = static_cast<int>(v);
  std::vector<std::vector<int>> vertex_autos;
  for (const auto& lab : search.min_labelings) {
    std::vector<int> perm(lab.size());
    for (size_t v = 0; v < lab.size(); ++v) perm[v] = base_inv[lab[v]];
    vertex_autos.push_back(std::move(perm));
  }

  // Extend each vertex automorphism by every compatible edge permutation:
  // parallel classes map onto parallel classes, in all m! ways.
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (int e = 0; e < g.edge_count(); ++e) classes[g.edges[e]].push_back(e);

  std::vector<VertexEdgePerm> elements;
  for (const auto& pv : vertex_autos) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> matchings;
    for (const auto& [pair, src] : classes) {
      std::pair<int, int> img{pv[pair.first], pv[pair.second]};
      if (img.first > img.second) std::swap(img.first, img.second);
      auto it = classes.find(img);
      if (it == classes.end() || it->second.size() != src.size())
        throw InternalError("vertex automorphism does not preserve edge multiplicities");
      matchings.emplace_back(src, it->second);
    }
    // Odometer over per-class bijections.
    std::vector<std::vector<int>> perms;
    for (auto& m : matchings) {
      std::vector<int> idx(m.second.size());
      for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
      perms.push_back(std::move(idx));
    }
    while (true) {
      VertexEdgePerm el;
      el.vertex_perm = pv;
      el.edge_perm.assign(g.edge_count(), -1);
      for (size_t c = 0; c < matchings.size(); ++c)
        for (size_t i = 0; i < matchings[c].first.size(); ++i)
          el.edge_perm[matchings[c].first[i]] = matchings[c].second[perms[c][i]];
      elements.push_back(std::move(el));
      if (elements.size() > kPairGroupCap)
        throw InternalError("automorphism pair group exceeds enumeration cap");
      // Advance: next lexicographic permutation in the last class that has one.
      size_t c = perms.size();
      while (c > 0) {
        --c;
        if (std::next_permutation(perms[c].begin(), perms[c].end())) break;
        if (c == 0) goto done;
      }
      if (perms.empty()) break;
    }
  done:;
  }

  std::sort(elements.begin(), elements.end());

  AutomorphismGroup out;
  out.pair_order = elements.size();
  int loops = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) ++loops;
  out.order = out.pair_order << loops;

  std::set<std::vector<int>> image;
  for (const auto& el : elements) image.insert(el.edge_perm);
  out.edge_action.assign(image.begin(), image.end());

  // Greedy generating set: add elements (deterministic order) that enlarge
  // the generated subgroup, tracked by closure under composition.
  auto compose = [](const VertexEdgePerm& a, const VertexEdgePerm& b) {
    VertexEdgePerm r;
    r.vertex_perm.resize(a.vertex_perm.size());
    r.edge_perm.resize(a.edge_perm.size());
    for (size_t i = 0; i < r.vertex_perm.size(); ++i)
      r.vertex_perm[i] = a.vertex_perm[b.vertex_perm[i]];
    for (size_t i = 0; i < r.edge_perm.size(); ++i)
      r.edge_perm[i] = a.edge_perm[b.edge_perm[i]];
    return r;
  };
  VertexEdgePerm identity;
  identity.vertex_perm.resize(g.vertex_count());
  identity.edge_perm.resize(g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v) identity.vertex_perm[v] = v;
  for (int e = 0; e < g.edge_count(); ++e) identity.edge_perm[e] = e;

  std::set<VertexEdgePerm> generated{identity};
  for (const auto& el : elements) {
    if (generated.count(el)) continue;
    out.generators.push_back(el);
    // Closure under the enlarged generating set.
    std::vector<VertexEdgePerm> frontier(generated.begin(), generated.end());
    generated.insert(el);
    frontier.push_back(el);
    while (!frontier.empty()) {
      VertexEdgePerm cur = frontier.back();
      frontier.pop_back();
      for (const auto& gen : out.generators) {
        for (const auto& next : {compose(cur, gen), compose(gen, cur)}) {
          if (generated.insert(next).second) frontier.push_back(next);
        }
      }
    }
    if (generated.size() == elements.size()) break;
  }
  if (generated.size() != elements.size())
    throw InternalError("generating set closure mismatch");

  return out;
}

std::optional<GraphIsomorphism> is_isomorphic(const WeightedGraph& a,
                                              const WeightedGraph& b) {
  CanonicalForm ca = canonical_form(a);
  CanonicalForm cb = canonical_form(b);
  if (ca.key != cb.key) return std::nullopt;

  std::vector<int> inv_v(cb.vertex_to_canonical.size());
  for (size_t v = 0; v < cb.vertex_to_canonical.size(); ++v)
    inv_v[cb.vertex_to_canonical[v]] = static_cast<int>(v);
  std::vector<int> inv_e(cb.edge_to_canonical.size());
  for (size_t e = 0; e < cb.edge_to_canonical.size(); ++e)
    inv_e[cb.edge_to_canonical[e]] = static_cast<int>(e);

  GraphIsomorphism iso;
  iso.vertex_map.resize(a.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v)
    iso.vertex_map[v] = inv_v[ca.vertex_to_canonical[v]];
  iso.edge_map.resize(a.edge_count());
  for (int e = 0; e < a.edge_count(); ++e)
    iso.edge_map[e] = inv_e[ca.edge_to_canonical[e]];
  return iso;
}

}  // namespace tropmod
