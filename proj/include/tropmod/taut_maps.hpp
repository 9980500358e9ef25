#pragma once

#include <string>
#include <vector>

#include "tropmod/catalog.hpp"
#include "tropmod/cone_complex.hpp"
#include "tropmod/graph.hpp"
#include "tropmod/weight_data.hpp"

namespace tropmod {

// How the reduction transformed each input edge. Dropped edges are exactly
// the ones contracted by leaf collapses; a merged edge names the other input
// edges spliced into the same output edge (each splice event joins exactly
// two live edges, so chains can accumulate more than one partner).
struct MapReport {
  enum class Fate { Kept, Dropped, Merged };
  struct EdgeTransform {
    Fate fate = Fate::Kept;
    int output_edge = -1;  // canonical edge index in the output, -1 if dropped
    std::vector<int> merged_with;
  };
  std::string input_class;
  std::string output_class;
  std::vector<EdgeTransform> edges;  // indexed by input edge
};

// Collapses the parts of an A-stable graph that fail B-stability, for
// dominated weights B <= A: degree-one genus-zero vertices with leg weight
// at most one are contracted into their neighbor, and degree-two genus-zero
// vertices with leg weight zero are smoothed by splicing their two edges.
// The result is B-stable and canonically labeled; B-stable inputs pass
// through unchanged.
WeightedGraph reduce_graph(const WeightedGraph& g, const WeightData& a,
                           const WeightData& b);

struct ReduceResult {
  TropicalCurve curve;
  MapReport report;
};

// Same transformation on a tropical curve: a contracted edge's coordinate is
// dropped, a splice assigns the new edge the sum of the two lengths
// (infinity-absorbing).
ReduceResult reduce_curve(const TropicalCurve& curve, const WeightData& a,
                          const WeightData& b);

// Forgets the legs outside `keep_labels` (1-based): runs the reduction with
// weight zero on the dropped legs, then deletes them and renumbers the kept
// legs 1..r preserving order. The retained weights must form a valid datum
// with the curve's genus.
TropicalCurve forget(const TropicalCurve& curve, const WeightData& a,
                     const std::vector<int>& keep_labels);

// Clutching over a stable graph G: one extended curve per vertex, stable of
// type (h(v), A(v)) where A(v) lists the leg weights at v followed by a 1
// per edge flag. The parts are joined by an infinite-length edge for every
// edge of G. Part legs are matched to v's legs in increasing label order,
// then to v's edge flags in (edge index, flag side) order.
TropicalCurve clutch_over(const WeightedGraph& g, const WeightData& datum,
                          const std::vector<TropicalCurve>& parts);

// Joins the last legs of two curves at infinity; curve i must be stable of
// type datum_i whose last weight is 1. The result has the remaining legs of
// the first curve followed by those of the second.
TropicalCurve clutch_pair(const TropicalCurve& c1, const WeightData& d1,
                          const TropicalCurve& c2, const WeightData& d2);

// Joins the last two legs of one curve at infinity, raising the genus by
// one; the datum's last two weights must be 1.
TropicalCurve glue_last_legs(const TropicalCurve& curve, const WeightData& datum);

// The section of the reduction map: every B-stable class is A-stable, so the
// B-catalog embeds into the A-catalog by the identity on graphs.
struct SectionEmbedding {
  WeightData a, b;
  StableGraphCatalog catalog_a, catalog_b;
  std::vector<int> b_to_a;  // flat id in catalog_b -> flat id in catalog_a
};

SectionEmbedding reduction_section(const WeightData& a, const WeightData& b);

}  // namespace tropmod
