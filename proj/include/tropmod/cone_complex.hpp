#pragma once

#include <string>
#include <vector>

#include "tropmod/catalog.hpp"
#include "tropmod/graph.hpp"
#include "tropmod/rational.hpp"

namespace tropmod {

// A weighted graph together with an edge length assignment. Lengths are
// indexed by edge index and must be strictly positive; infinite lengths are
// permitted only when `extended` is set.
struct TropicalCurve {
  WeightedGraph graph;
  std::vector<ExtRational> lengths;
  bool extended = false;

  static TropicalCurve make(WeightedGraph graph, std::vector<ExtRational> lengths,
                            bool extended);
};

// One cone of the complex: the orthant with a coordinate per edge of the
// referenced catalog graph, together with the automorphism action on those
// coordinates.
struct Cone {
  int catalog_id = 0;  // flat catalog index
  int dim = 0;         // == edge count of the referenced graph
  std::vector<std::vector<int>> edge_action;
};

// Face inclusion induced by a single-edge contraction: the cone of the
// contracted graph embeds into the cone of the bigger graph by sending each
// surviving edge coordinate to itself and pinning the contracted coordinate
// to zero.
struct FaceMap {
  int face_cone = 0;  // cone of the contracted graph
  int big_cone = 0;
  std::vector<int> injection;  // face edge index -> big edge index

  auto operator<=>(const FaceMap&) const = default;
};

struct GeneralizedConeComplex {
  WeightData datum;
  bool extended = false;
  StableGraphCatalog catalog;
  std::vector<Cone> cones;     // indexed by flat catalog id
  std::vector<FaceMap> faces;  // single-edge contractions, deduplicated
};

GeneralizedConeComplex build_complex(const WeightData& datum, bool extended);

// Entry d counts the cones of dimension d.
std::vector<long long> f_vector(const GeneralizedConeComplex& cx);

// Maximal cone dimension.
int dimension(const GeneralizedConeComplex& cx);

// Canonical coordinates of a curve: its cone and the lexicographically
// minimal representative of the length vector's orbit under the cone's edge
// action. Two curves locate identically iff they are isomorphic as tropical
// curves.
struct LocateResult {
  int cone_id = 0;
  std::vector<ExtRational> coordinates;
};

LocateResult locate(const GeneralizedConeComplex& cx, const TropicalCurve& curve);

// The orbit-reduction step by itself: canonical key of the underlying graph
// plus the minimized coordinate vector. Useful for comparing curves without
// building a complex.
std::pair<std::string, std::vector<ExtRational>> canonical_coordinates(
    const TropicalCurve& curve);

}  // namespace tropmod
