#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmod/catalog.hpp"
#include "tropmod/cone_complex.hpp"
#include "tropmod/graph.hpp"
#include "tropmod/weight_data.hpp"

namespace tropmod {

// On-disk document for a graph or curve. Schema (version "1"):
//   {
//     "schema_version": "1",
//     "datum":        {"genus": g, "weights": ["1","1/2",...]},   // optional
//     "genus_labels": {"v0": 0, "v1": 1, ...},
//     "edges":        [["v0","v1"], ["v1","v1"], ...],
//     "legs":         {"1": "v0", ..., "n": "v1"},
//     "lengths":      {"0": "3/2", "1": "inf", ...}               // optional
//   }
// Vertex ids are strings; lengths are keyed by the index into "edges".
// Rationals are always "p/q" strings, never floats; infinity is "inf".
struct GraphDocument {
  std::string schema_version = "1";
  std::optional<WeightData> datum;
  WeightedGraph graph;
  std::optional<std::vector<ExtRational>> lengths;

  TropicalCurve curve(bool extended) const;
};

// Parses and validates; errors carry a JSON-pointer-style path.
GraphDocument parse_graph(const std::string& json_text);

// Canonical serialization: vertices renamed v0..vK in canonical order,
// edges sorted, byte-identical across runs.
std::string serialize_graph(const GraphDocument& doc);

std::string export_dot(const WeightedGraph& g,
                       const std::vector<ExtRational>* lengths = nullptr);
std::string export_dot(const StableGraphCatalog& catalog);
std::string export_dot(const StableGraphCatalog& catalog, const ContractionPoset& poset);

}  // namespace tropmod
