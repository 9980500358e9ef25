#include "tropmod/json_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tropmod/canonical.hpp"

#include <json.hpp>

namespace tropmod {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError("invalid graph document at " + path + ": " + what);
}

const json& require(const json& doc, const char* field) {
  if (!doc.contains(field)) fail("/" + std::string(field), "missing field");
  return doc.at(field);
}

}  // namespace

TropicalCurve GraphDocument::curve(bool extended) const {
  if (!lengths) throw ValidationError("document carries no edge lengths");
  return TropicalCurve::make(graph, *lengths, extended);
}

GraphDocument parse_graph(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "document must be an object");

  GraphDocument out;
  if (doc.contains("schema_version")) {
    if (!doc["schema_version"].is_string()) fail("/schema_version", "must be a string");
    out.schema_version = doc["schema_version"].get<std::string>();
    if (out.schema_version != "1") fail("/schema_version", "unsupported version");
  }

  const json& genus_labels = require(doc, "genus_labels");
  if (!genus_labels.is_object() || genus_labels.empty())
    fail("/genus_labels", "must be a non-empty object");
  std::map<std::string, int> vertex_ids;  // sorted by id for determinism
  for (auto it = genus_labels.begin(); it != genus_labels.end(); ++it)
    vertex_ids.emplace(it.key(), 0);
  {
    int next = 0;
    for (auto& [id, idx] : vertex_ids) idx = next++;
  }
  std::vector<int> genus(vertex_ids.size(), 0);
  for (auto it = genus_labels.begin(); it != genus_labels.end(); ++it) {
    if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
      fail("/genus_labels/" + it.key(), "genus must be a nonnegative integer");
    genus[vertex_ids[it.key()]] = it.value().get<int>();
  }

  auto vertex_of = [&](const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "vertex id must be a string");
    auto it = vertex_ids.find(v.get<std::string>());
    if (it == vertex_ids.end()) fail(path, "unknown vertex '" + v.get<std::string>() + "'");
    return it->second;
  };

  std::vector<std::pair<int, int>> edges;
  const json& edges_json = require(doc, "edges");
  if (!edges_json.is_array()) fail("/edges", "must be an array");
  for (size_t i = 0; i < edges_json.size(); ++i) {
    const json& e = edges_json[i];
    std::string path = "/edges/" + std::to_string(i);
    if (!e.is_array() || e.size() != 2) fail(path, "edge must be a pair of vertex ids");
    edges.emplace_back(vertex_of(e[0], path + "/0"), vertex_of(e[1], path + "/1"));
  }

  const json& legs_json = require(doc, "legs");
  if (!legs_json.is_object()) fail("/legs", "must be an object");
  const int n = static_cast<int>(legs_json.size());
  std::vector<int> leg_roots(n, -1);
  for (auto it = legs_json.begin(); it != legs_json.end(); ++it) {
    int label = 0;
    try {
      size_t used = 0;
      label = std::stoi(it.key(), &used);
      if (used != it.key().size()) label = 0;
    } catch (...) {
      label = 0;
    }
    if (label < 1 || label > n)
      fail("/legs", "leg labels must be exactly 1.." + std::to_string(n) +
                        ", got '" + it.key() + "'");
    if (leg_roots[label - 1] != -1) fail("/legs", "duplicate leg label " + it.key());
    leg_roots[label - 1] = vertex_of(it.value(), "/legs/" + it.key());
  }

  try {
    out.graph = WeightedGraph::make(std::move(genus), std::move(edges),
                                    std::move(leg_roots));
  } catch (const ValidationError& e) {
    fail("", e.what());
  }

  if (doc.contains("datum")) {
    const json& d = doc["datum"];
    if (!d.is_object()) fail("/datum", "must be an object");
    const json& g = require(d, "genus");
    if (!g.is_number_integer()) fail("/datum/genus", "must be an integer");
    const json& ws = require(d, "weights");
    if (!ws.is_array()) fail("/datum/weights", "must be an array of rational strings");
    std::vector<Rational> weights;
    for (size_t i = 0; i < ws.size(); ++i) {
      if (!ws[i].is_string())
        fail("/datum/weights/" + std::to_string(i), "weights are 'p/q' strings");
      try {
        weights.push_back(Rational::parse(ws[i].get<std::string>()));
      } catch (const ValidationError& e) {
        fail("/datum/weights/" + std::to_string(i), e.what());
      }
    }
    try {
      out.datum = WeightData::make(g.get<int>(), std::move(weights));
    } catch (const ValidationError& e) {
      fail("/datum", e.what());
    }
  }

  if (doc.contains("lengths")) {
    const json& ls = doc["lengths"];
    if (!ls.is_object()) fail("/lengths", "must be an object keyed by edge index");
    std::vector<ExtRational> lengths(out.graph.edge_count(), ExtRational(Rational(1)));
    std::vector<bool> seen(out.graph.edge_count(), false);
    for (auto it = ls.begin(); it != ls.end(); ++it) {
      int index = -1;
      try {
        index = std::stoi(it.key());
      } catch (...) {
      }
      if (index < 0 || index >= out.graph.edge_count())
        fail("/lengths", "edge index '" + it.key() + "' out of range");
      if (!it.value().is_string())
        fail("/lengths/" + it.key(), "lengths are 'p/q' strings or 'inf'");
      try {
        lengths[index] = ExtRational::parse(it.value().get<std::string>());
      } catch (const ValidationError& e) {
        fail("/lengths/" + it.key(), e.what());
      }
      seen[index] = true;
    }
    for (int e = 0; e < out.graph.edge_count(); ++e)
      if (!seen[e]) fail("/lengths", "missing length for edge " + std::to_string(e));
    out.lengths = std::move(lengths);
  }

  return out;
}

std::string serialize_graph(const GraphDocument& doc) {
  CanonicalForm c = canonical_form(doc.graph);

  json out;
  out["schema_version"] = doc.schema_version;
  if (doc.datum) {
    json d;
    d["genus"] = doc.datum->g;
    json ws = json::array();
    for (const auto& w : doc.datum->weights) ws.push_back(w.str());
    d["weights"] = std::move(ws);
    out["datum"] = std::move(d);
  }

  json genus_labels = json::object();
  for (int v = 0; v < c.graph.vertex_count(); ++v)
    genus_labels["v" + std::to_string(v)] = c.graph.genus_labels[v];
  out["genus_labels"] = std::move(genus_labels);

  json edges = json::array();
  for (const auto& e : c.graph.edges)
    edges.push_back({"v" + std::to_string(e.first), "v" + std::to_string(e.second)});
  out["edges"] = std::move(edges);

  json legs = json::object();
  for (int i = 0; i < c.graph.leg_count(); ++i)
    legs[std::to_string(i + 1)] = "v" + std::to_string(c.graph.leg_roots[i]);
  out["legs"] = std::move(legs);

  if (doc.lengths) {
    json lengths = json::object();
    for (size_t e = 0; e < doc.lengths->size(); ++e)
      lengths[std::to_string(c.edge_to_canonical[e])] = (*doc.lengths)[e].str();
    out["lengths"] = std::move(lengths);
  }
  return out.dump(2) + "\n";
}

namespace {

void dot_one_graph(std::ostringstream& out, const WeightedGraph& g,
                   const std::vector<ExtRational>* lengths, const std::string& prefix,
                   const std::string& indent) {
  for (int v = 0; v < g.vertex_count(); ++v)
    out << indent << prefix << "v" << v << " [label=\"v" << v << " (g="
        << g.genus_labels[v] << ")\"];\n";
  for (int i = 0; i < g.leg_count(); ++i) {
    out << indent << prefix << "leg" << i + 1 << " [shape=none,label=\"" << i + 1
        << "\"];\n";
    out << indent << prefix << "v" << g.leg_roots[i] << " -- " << prefix << "leg"
        << i + 1 << ";\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    out << indent << prefix << "v" << g.edges[e].first << " -- " << prefix << "v"
        << g.edges[e].second;
    if (lengths) out << " [label=\"" << (*lengths)[e].str() << "\"]";
    out << ";\n";
  }
}

}  // namespace

std::string export_dot(const WeightedGraph& g, const std::vector<ExtRational>* lengths) {
  std::ostringstream out;
  out << "graph tropical_curve {\n";
  dot_one_graph(out, g, lengths, "", "  ");
  out << "}\n";
  return out.str();
}

std::string export_dot(const StableGraphCatalog& catalog) {
  std::ostringstream out;
  out << "graph stable_graph_catalog {\n";
  for (size_t layer = 0; layer < catalog.layers.size(); ++layer) {
    out << "  subgraph cluster_layer" << layer << " {\n";
    out << "    label=\"" << layer << " edge" << (layer == 1 ? "" : "s") << "\";\n";
    for (size_t pos = 0; pos < catalog.layers[layer].size(); ++pos) {
      std::string prefix = "L" + std::to_string(layer) + "p" + std::to_string(pos) + "_";
      out << "    subgraph cluster_" << prefix << "{\n";
      out << "      label=\"#" << pos << "\";\n";
      dot_one_graph(out, catalog.layers[layer][pos].graph, nullptr, prefix, "      ");
      out << "    }\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const StableGraphCatalog& catalog, const ContractionPoset& poset) {
  std::ostringstream out;
  out << "digraph contraction_poset {\n";
  out << "  rankdir=BT;\n";
  for (size_t layer = 0; layer < catalog.layers.size(); ++layer)
    for (size_t pos = 0; pos < catalog.layers[layer].size(); ++pos)
      out << "  n" << layer << "_" << pos << " [label=\"L" << layer << "#" << pos
          << "\"];\n";
  for (const auto& cover : poset.covers)
    out << "  n" << cover.from_layer << "_" << cover.from_pos << " -> n"
        << cover.to_layer << "_" << cover.to_pos << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tropmod
