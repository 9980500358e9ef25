#include "support/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace oracle {

using tropmod::Rational;
using tropmod::VertexEdgePerm;
using tropmod::WeightData;
using tropmod::WeightedGraph;

namespace {

// Per-vertex key that any isomorphism must preserve: genus and the exact set
// of leg labels rooted there.
std::vector<std::pair<int, std::vector<int>>> vertex_keys(const WeightedGraph& g) {
  std::vector<std::pair<int, std::vector<int>>> keys(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) keys[v].first = g.genus_labels[v];
  for (int i = 0; i < g.leg_count(); ++i) keys[g.leg_roots[i]].second.push_back(i);
  return keys;
}

std::vector<std::pair<int, int>> mapped_edges(const WeightedGraph& g,
                                              const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    int a = perm[e.first], b = perm[e.second];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Runs fn(perm) for every vertex bijection a -> b compatible with the keys;
// stops early when fn returns true.
template <typename Fn>
bool for_each_key_respecting_map(const WeightedGraph& a, const WeightedGraph& b, Fn fn) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.leg_count() != b.leg_count())
    return false;
  auto keys_a = vertex_keys(a);
  auto keys_b = vertex_keys(b);

  std::vector<std::vector<int>> candidates(a.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v)
    for (int w = 0; w < b.vertex_count(); ++w)
      if (keys_a[v] == keys_b[w]) candidates[v].push_back(w);

  std::vector<int> perm(a.vertex_count(), -1);
  std::vector<bool> used(b.vertex_count(), false);
  std::vector<int> cursor(a.vertex_count(), 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == a.vertex_count()) {
      if (fn(perm)) return true;
      --depth;
      continue;
    }
    bool advanced = false;
    while (cursor[depth] < static_cast<int>(candidates[depth].size())) {
      int w = candidates[depth][cursor[depth]++];
      if (used[w]) continue;
      if (perm[depth] != -1) used[perm[depth]] = false;
      perm[depth] = w;
      used[w] = true;
      ++depth;
      advanced = true;
      break;
    }
    if (!advanced) {
      if (perm[depth] != -1) {
        used[perm[depth]] = false;
        perm[depth] = -1;
      }
      cursor[depth] = 0;
      --depth;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> brute_isomorphism(const WeightedGraph& a,
                                                  const WeightedGraph& b) {
  auto target = mapped_edges(b, [&] {
    std::vector<int> identity(b.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    return identity;
  }());
  std::optional<std::vector<int>> found;
  for_each_key_respecting_map(a, b, [&](const std::vector<int>& perm) {
    if (mapped_edges(a, perm) == target) {
      found = perm;
      return true;
    }
    return false;
  });
  return found;
}

BrutePairGroup brute_automorphisms(const WeightedGraph& g) {
  BrutePairGroup group;

  // All vertex permutations preserving keys and the edge multiset...
  std::vector<std::vector<int>> vertex_perms;
  auto target = mapped_edges(g, [&] {
    std::vector<int> identity(g.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    return identity;
  }());
  for_each_key_respecting_map(g, g, [&](const std::vector<int>& perm) {
    if (mapped_edges(g, perm) == target) vertex_perms.push_back(perm);
    return false;
  });

  // ...paired with every edge permutation that transports endpoints.
  std::vector<int> edge_perm(g.edge_count());
  std::iota(edge_perm.begin(), edge_perm.end(), 0);
  do {
    for (const auto& vp : vertex_perms) {
      bool ok = true;
      for (int e = 0; e < g.edge_count() && ok; ++e) {
        int a = vp[g.edges[e].first], b = vp[g.edges[e].second];
        std::pair<int, int> want{std::min(a, b), std::max(a, b)};
        ok = g.edges[edge_perm[e]] == want;
      }
      if (ok) group.elements.push_back(VertexEdgePerm{vp, edge_perm});
    }
  } while (std::next_permutation(edge_perm.begin(), edge_perm.end()));

  int loops = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) ++loops;
  group.flag_order = static_cast<unsigned long long>(group.elements.size()) << loops;
  return group;
}

namespace {

// Stability over scaled integers: with weights c_i / denom, vertex v is
// stable iff denom * (2h(v) - 2 + valence) + sum of leg numerators > 0.
struct ScaledWeights {
  long long denom = 1;
  std::vector<long long> numerators;
};

ScaledWeights scale(const WeightData& datum) {
  ScaledWeights s;
  for (const auto& w : datum.weights) {
    long long den = std::stoll(w.raw().get_den().get_str());
    s.denom = std::lcm(s.denom, den);
  }
  for (const auto& w : datum.weights) {
    long long num = std::stoll(w.raw().get_num().get_str());
    long long den = std::stoll(w.raw().get_den().get_str());
    s.numerators.push_back(num * (s.denom / den));
  }
  return s;
}

bool scaled_stable(const std::vector<int>& genus,
                   const std::vector<std::pair<int, int>>& edges,
                   const std::vector<int>& legs, const ScaledWeights& w) {
  const int n_vertices = static_cast<int>(genus.size());
  std::vector<long long> coeff(n_vertices);
  for (int v = 0; v < n_vertices; ++v)
    coeff[v] = w.denom * (2LL * genus[v] - 2);
  for (const auto& e : edges) {
    coeff[e.first] += w.denom;
    coeff[e.second] += w.denom;
  }
  for (size_t i = 0; i < legs.size(); ++i) coeff[legs[i]] += w.numerators[i];
  for (int v = 0; v < n_vertices; ++v)
    if (coeff[v] <= 0) return false;
  return true;
}

bool connected(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find(e.first)] = find(e.second);
  for (int v = 1; v < n_vertices; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

std::string bucket_key(const WeightedGraph& g) {
  auto keys = vertex_keys(g);
  std::vector<std::string> parts;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::ostringstream p;
    p << keys[v].first << ":" << tropmod::edge_valence(g, v) << ":";
    for (int label : keys[v].second) p << label << ".";
    parts.push_back(p.str());
  }
  std::sort(parts.begin(), parts.end());
  std::ostringstream out;
  out << g.edge_count() << ";";
  for (const auto& p : parts) out << p << "|";
  return out.str();
}

// Multisets of `count` pairs drawn (with repetition) from the vertex pairs
// of an n-vertex graph, in nondecreasing order.
void edge_multisets(int n_vertices, int count,
                    std::vector<std::vector<std::pair<int, int>>>& out) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n_vertices; ++i)
    for (int j = i; j < n_vertices; ++j) pairs.emplace_back(i, j);
  std::vector<int> pick(count, 0);
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int idx : pick) edges.push_back(pairs[idx]);
    out.push_back(std::move(edges));
    int i = count - 1;
    while (i >= 0 && pick[i] == static_cast<int>(pairs.size()) - 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < count; ++j) pick[j] = pick[i];
  }
}

// Compositions of `total` into n_vertices nonnegative parts.
void genus_assignments(int n_vertices, int total, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(n_vertices, 0);
  auto rec = [&](auto&& self, int v, int remaining) -> void {
    if (v == n_vertices - 1) {
      cur[v] = remaining;
      out.push_back(cur);
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      cur[v] = take;
      self(self, v + 1, remaining - take);
    }
  };
  rec(rec, 0, total);
}

}  // namespace

std::vector<std::vector<WeightedGraph>> brute_enumerate(const WeightData& datum,
                                                        int max_edges) {
  ScaledWeights scaled = scale(datum);
  const int n_legs = datum.leg_count();

  std::vector<std::vector<WeightedGraph>> layers(max_edges + 1);
  std::vector<std::map<std::string, std::vector<int>>> buckets(max_edges + 1);

  for (int n_vertices = 1; n_vertices <= max_edges + 1; ++n_vertices) {
    for (int n_edges = n_vertices - 1; n_edges <= max_edges; ++n_edges) {
      int betti = n_edges - n_vertices + 1;
      int genus_left = datum.g - betti;
      if (genus_left < 0) continue;

      std::vector<std::vector<std::pair<int, int>>> multisets;
      edge_multisets(n_vertices, n_edges, multisets);
      std::vector<std::vector<int>> genus_opts;
      genus_assignments(n_vertices, genus_left, genus_opts);

      for (const auto& edges : multisets) {
        if (!connected(n_vertices, edges)) continue;
        for (const auto& genus : genus_opts) {
          // Odometer over all leg placements.
          std::vector<int> legs(n_legs, 0);
          while (true) {
            if (scaled_stable(genus, edges, legs, scaled)) {
              WeightedGraph g = WeightedGraph::make(genus, edges, legs);
              std::string key = bucket_key(g);
              auto& bucket = buckets[n_edges][key];
              bool duplicate = false;
              for (int idx : bucket)
                if (brute_isomorphism(layers[n_edges][idx], g)) {
                  duplicate = true;
                  break;
                }
              if (!duplicate) {
                bucket.push_back(static_cast<int>(layers[n_edges].size()));
                layers[n_edges].push_back(std::move(g));
              }
            }
            int i = n_legs - 1;
            while (i >= 0 && legs[i] == n_vertices - 1) legs[i--] = 0;
            if (i < 0) break;
            ++legs[i];
          }
        }
      }
    }
  }

  // Trim empty top layers so the shape matches the generated catalog.
  while (!layers.empty() && layers.back().empty()) layers.pop_back();
  return layers;
}

}  // namespace oracle
