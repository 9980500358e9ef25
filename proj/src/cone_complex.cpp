#include "tropmod/cone_complex.hpp"

#include <algorithm>
#include <set>

namespace tropmod {

TropicalCurve TropicalCurve::make(WeightedGraph graph, std::vector<ExtRational> lengths,
                                  bool extended) {
  if (static_cast<int>(lengths.size()) != graph.edge_count())
    throw ValidationError("curve needs one length per edge");
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i].is_infinite()) {
      if (!extended)
        throw ValidationError("infinite length on edge " + std::to_string(i) +
                              " in a non-extended curve");
    } else if (lengths[i].finite_value().sign() <= 0) {
      throw ValidationError("edge " + std::to_string(i) + " has non-positive length");
    }
  }
  return TropicalCurve{std::move(graph), std::move(lengths), extended};
}

namespace {

std::vector<ExtRational> orbit_minimum(const std::vector<ExtRational>& coords,
                                       const std::vector<std::vector<int>>& action) {
  std::vector<ExtRational> best = coords;
  std::vector<ExtRational> candidate(coords.size());
  for (const auto& perm : action) {
    for (size_t j = 0; j < coords.size(); ++j) candidate[perm[j]] = coords[j];
    if (std::lexicographical_compare(candidate.begin(), candidate.end(), best.begin(),
                                     best.end(),
                                     [](const ExtRational& a, const ExtRational& b) {
                                       return a < b;
                                     }))
      best = candidate;
  }
  return best;
}

}  // namespace

GeneralizedConeComplex build_complex(const WeightData& datum, bool extended) {
  GeneralizedConeComplex cx;
  cx.datum = datum;
  cx.extended = extended;
  cx.catalog = enumerate_stable_graphs(datum);

  cx.cones.resize(cx.catalog.total());
  for (int layer = 0; layer < static_cast<int>(cx.catalog.layers.size()); ++layer) {
    for (int pos = 0; pos < static_cast<int>(cx.catalog.layers[layer].size()); ++pos) {
      int id = cx.catalog.flat_id(layer, pos);
      const WeightedGraph& g = cx.catalog.layers[layer][pos].graph;
      Cone cone;
      cone.catalog_id = id;
      cone.dim = g.edge_count();
      cone.edge_action = automorphisms(g).edge_action;
      cx.cones[id] = std::move(cone);
    }
  }

  // One face map per single-edge contraction; parallel contractions landing
  // on the same pair with the same coordinate injection collapse.
  std::set<FaceMap> faces;
  for (int layer = 1; layer < static_cast<int>(cx.catalog.layers.size()); ++layer) {
    for (int pos = 0; pos < static_cast<int>(cx.catalog.layers[layer].size()); ++pos) {
      const WeightedGraph& big = cx.catalog.layers[layer][pos].graph;
      int big_id = cx.catalog.flat_id(layer, pos);
      for (int e = 0; e < big.edge_count(); ++e) {
        auto [small, cmap] = contract(big, {e});
        CanonicalForm c = canonical_form(small);
        auto it = cx.catalog.index.find(c.key);
        if (it == cx.catalog.index.end())
          throw InternalError("face of a catalog cone is missing from the catalog");
        int face_id = cx.catalog.flat_id(it->second.first, it->second.second);

        // Face edge j corresponds to the surviving big edge mapping onto the
        // contracted graph's edge c^{-1}(j).
        std::vector<int> inv_canon(small.edge_count());
        for (int k = 0; k < small.edge_count(); ++k) inv_canon[c.edge_to_canonical[k]] = k;
        std::vector<int> inv_surv(small.edge_count());
        for (int k = 0; k < big.edge_count(); ++k)
          if (cmap.edge_map[k] >= 0) inv_surv[cmap.edge_map[k]] = k;
        FaceMap fm;
        fm.face_cone = face_id;
        fm.big_cone = big_id;
        fm.injection.resize(small.edge_count());
        for (int j = 0; j < small.edge_count(); ++j)
          fm.injection[j] = inv_surv[inv_canon[j]];
        faces.insert(std::move(fm));
      }
    }
  }
  cx.faces.assign(faces.begin(), faces.end());
  return cx;
}

std::vector<long long> f_vector(const GeneralizedConeComplex& cx) {
  std::vector<long long> counts;
  for (const auto& layer : cx.catalog.layers)
    counts.push_back(static_cast<long long>(layer.size()));
  return counts;
}

int dimension(const GeneralizedConeComplex& cx) {
  int best = 0;
  for (const auto& cone : cx.cones) best = std::max(best, cone.dim);
  return best;
}

std::pair<std::string, std::vector<ExtRational>> canonical_coordinates(
    const TropicalCurve& curve) {
  CanonicalForm c = canonical_form(curve.graph);
  std::vector<ExtRational> coords(curve.lengths.size());
  for (size_t e = 0; e < curve.lengths.size(); ++e)
    coords[c.edge_to_canonical[e]] = curve.lengths[e];
  auto action = automorphisms(c.graph).edge_action;
  return {c.key, orbit_minimum(coords, action)};
}

LocateResult locate(const GeneralizedConeComplex& cx, const TropicalCurve& curve) {
  for (const auto& len : curve.lengths)
    if (len.is_infinite() && !cx.extended)
      throw ValidationError("curve has an infinite edge but the complex is not extended");
  if (!is_stable(curve.graph, cx.datum))
    throw ValidationError("curve's graph is not stable for the complex datum");

  CanonicalForm c = canonical_form(curve.graph);
  auto it = cx.catalog.index.find(c.key);
  if (it == cx.catalog.index.end())
    throw InternalError("stable graph missing from the catalog");
  int cone_id = cx.catalog.flat_id(it->second.first, it->second.second);

  std::vector<ExtRational> coords(curve.lengths.size());
  for (size_t e = 0; e < curve.lengths.size(); ++e)
    coords[c.edge_to_canonical[e]] = curve.lengths[e];
  return LocateResult{cone_id, orbit_minimum(coords, cx.cones[cone_id].edge_action)};
}

}  // namespace tropmod
