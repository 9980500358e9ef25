// troph: construct and explore moduli of weighted stable tropical curves.
//
// Subcommands: enumerate, fvector, locate, reduce, forget, clutch, chamber,
// kapranov, losev-manin, export. Exit codes: 0 success, 1 validation error,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "tropmod/canonical.hpp"
#include "tropmod/catalog.hpp"
#include "tropmod/chambers.hpp"
#include "tropmod/cone_complex.hpp"
#include "tropmod/json_io.hpp"
#include "tropmod/losev_manin.hpp"
#include "tropmod/taut_maps.hpp"

namespace {

using nlohmann::json;
using namespace tropmod;

void apply_thread_cap() {
#ifdef _OPENMP
  const char* env = std::getenv("TROPH_THREADS");
  if (!env) return;
  int requested = std::atoi(env);
  if (requested < 1) return;
  int hw = omp_get_max_threads();
  omp_set_num_threads(std::min(requested, hw));
#endif
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Rational> parse_weight_list(const std::string& text) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

json graph_json(const WeightedGraph& g) {
  GraphDocument doc;
  doc.graph = g;
  return json::parse(serialize_graph(doc));
}

json curve_json(const TropicalCurve& curve) {
  GraphDocument doc;
  doc.graph = curve.graph;
  doc.lengths = curve.lengths;
  return json::parse(serialize_graph(doc));
}

json datum_json(const WeightData& d) {
  json out;
  out["genus"] = d.g;
  json ws = json::array();
  for (const auto& w : d.weights) ws.push_back(w.str());
  out["weights"] = std::move(ws);
  return out;
}

void print_layer_summary(const StableGraphCatalog& catalog, std::ostream& out) {
  out << "datum " << catalog.datum.str() << "\n";
  int total = 0;
  for (size_t layer = 0; layer < catalog.layers.size(); ++layer) {
    out << "  " << layer << " edge" << (layer == 1 ? " " : "s") << ": "
        << catalog.layers[layer].size() << " class"
        << (catalog.layers[layer].size() == 1 ? "" : "es") << "\n";
    total += static_cast<int>(catalog.layers[layer].size());
  }
  out << "  total: " << total << "\n";
}

WeightData datum_from_options(int genus, const std::string& weights) {
  return WeightData::make(genus, parse_weight_list(weights));
}

// Datum for a curve command: document datum, overridden by explicit flags.
WeightData resolve_datum(const GraphDocument& doc, int genus_flag,
                         const std::string& weights_flag, bool genus_set,
                         bool weights_set) {
  if (weights_set) {
    int g = genus_set ? genus_flag
                      : (doc.datum ? doc.datum->g : genus(doc.graph));
    return WeightData::make(g, parse_weight_list(weights_flag));
  }
  if (doc.datum) return *doc.datum;
  throw ValidationError("no weight datum: supply --weights or embed one in the document");
}

TropicalCurve curve_or_unit(const GraphDocument& doc, bool extended) {
  if (doc.lengths) return doc.curve(extended);
  return TropicalCurve::make(
      doc.graph,
      std::vector<ExtRational>(doc.graph.edge_count(), ExtRational(Rational(1))),
      extended);
}

int run(int argc, char** argv) {
  CLI::App app{"moduli of weighted stable tropical curves"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "list all stable graph classes");
  int en_genus = 0;
  std::string en_weights;
  int en_layer = -1;
  bool en_dot = false;
  cmd_enum->add_option("--genus", en_genus, "genus g")->required();
  cmd_enum->add_option("--weights", en_weights, "comma-separated rational weights")
      ->required();
  cmd_enum->add_option("--layer", en_layer, "print only this edge-count layer");
  cmd_enum->add_flag("--dot", en_dot, "emit DOT instead of JSON/table");

  // fvector
  auto* cmd_fvec = app.add_subcommand("fvector", "cone counts by dimension");
  int fv_genus = 0;
  std::string fv_weights;
  cmd_fvec->add_option("--genus", fv_genus, "genus g")->required();
  cmd_fvec->add_option("--weights", fv_weights, "comma-separated weights")->required();

  // locate
  auto* cmd_locate = app.add_subcommand("locate", "place a curve in its complex");
  std::string loc_curve;
  int loc_genus = 0;
  std::string loc_weights;
  bool loc_extended = false;
  cmd_locate->add_option("--curve", loc_curve, "curve JSON file")->required();
  auto* loc_gopt = cmd_locate->add_option("--genus", loc_genus, "genus override");
  auto* loc_wopt = cmd_locate->add_option("--weights", loc_weights, "weights override");
  cmd_locate->add_flag("--extended", loc_extended, "allow infinite lengths");

  // reduce
  auto* cmd_reduce = app.add_subcommand("reduce", "apply the reduction map");
  std::string red_from, red_to, red_curve;
  int red_genus = 0;
  cmd_reduce->add_option("--from", red_from, "source weights")->required();
  cmd_reduce->add_option("--to", red_to, "target weights")->required();
  cmd_reduce->add_option("--curve", red_curve, "curve JSON file")->required();
  auto* red_gopt = cmd_reduce->add_option("--genus", red_genus, "genus override");

  // forget
  auto* cmd_forget = app.add_subcommand("forget", "forget marked legs");
  std::string fg_keep, fg_curve, fg_weights;
  int fg_genus = 0;
  cmd_forget->add_option("--keep", fg_keep, "comma-separated leg labels to keep")
      ->required();
  cmd_forget->add_option("--curve", fg_curve, "curve JSON file")->required();
  auto* fg_gopt = cmd_forget->add_option("--genus", fg_genus, "genus override");
  auto* fg_wopt = cmd_forget->add_option("--weights", fg_weights, "weights override");

  // clutch
  auto* cmd_clutch = app.add_subcommand("clutch", "clutch curves over a stable graph");
  std::string cl_graph, cl_parts;
  int cl_genus = 0;
  std::string cl_weights;
  cmd_clutch->add_option("--graph", cl_graph, "stable graph JSON file")->required();
  cmd_clutch->add_option("--parts", cl_parts, "comma-separated part curve files")
      ->required();
  auto* cl_gopt = cmd_clutch->add_option("--genus", cl_genus, "genus override");
  auto* cl_wopt = cmd_clutch->add_option("--weights", cl_weights, "weights override");

  // chamber
  auto* cmd_chamber = app.add_subcommand("chamber", "wall and chamber structure");
  cmd_chamber->require_subcommand(1);
  auto* cmd_walls = cmd_chamber->add_subcommand("walls", "list walls");
  int ch_genus = 0, ch_n = 0;
  std::string ch_kind = "fine";
  cmd_walls->add_option("--genus", ch_genus, "genus g")->required();
  cmd_walls->add_option("--n", ch_n, "number of legs")->required();
  cmd_walls->add_option("--kind", ch_kind, "fine|coarse");
  auto* cmd_chloc = cmd_chamber->add_subcommand("locate", "chamber signature of weights");
  int chl_genus = 0;
  std::string chl_weights, chl_kind = "fine";
  cmd_chloc->add_option("--genus", chl_genus, "genus g")->required();
  cmd_chloc->add_option("--weights", chl_weights, "weights")->required();
  cmd_chloc->add_option("--kind", chl_kind, "fine|coarse");
  auto* cmd_chdiff = cmd_chamber->add_subcommand("diff", "catalog diff of two weights");
  int chd_genus = 0;
  std::string chd_from, chd_to;
  cmd_chdiff->add_option("--genus", chd_genus, "genus g")->required();
  cmd_chdiff->add_option("--from", chd_from, "source weights")->required();
  cmd_chdiff->add_option("--to", chd_to, "target weights")->required();

  // kapranov
  auto* cmd_kapranov = app.add_subcommand("kapranov", "blow-up sequence weights");
  int ka_n = 0, ka_r = 0, ka_s = 0;
  cmd_kapranov->add_option("--n", ka_n, "number of legs")->required();
  cmd_kapranov->add_option("--r", ka_r, "step r")->required();
  cmd_kapranov->add_option("--s", ka_s, "step s")->required();

  // losev-manin
  auto* cmd_lm = app.add_subcommand("losev-manin", "chain-curve moduli");
  int lm_n = 0;
  bool lm_fvec = false, lm_graphs = false, lm_check = false;
  cmd_lm->add_option("--n", lm_n, "number of light legs")->required();
  cmd_lm->add_flag("--fvector", lm_fvec, "print the f-vector");
  cmd_lm->add_flag("--graphs", lm_graphs, "print the chain graphs");
  cmd_lm->add_flag("--check", lm_check, "verify partitions against the complex");

  // export
  auto* cmd_export = app.add_subcommand("export", "DOT export");
  std::string ex_graph;
  bool ex_catalog = false, ex_poset = false;
  int ex_genus = 0;
  std::string ex_weights;
  cmd_export->add_option("--graph", ex_graph, "graph/curve JSON file");
  cmd_export->add_flag("--catalog", ex_catalog, "export the whole catalog");
  cmd_export->add_flag("--poset", ex_poset, "export the contraction poset");
  cmd_export->add_option("--genus", ex_genus, "genus (catalog/poset)");
  cmd_export->add_option("--weights", ex_weights, "weights (catalog/poset)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  apply_thread_cap();

  if (*cmd_enum) {
    StableGraphCatalog catalog =
        enumerate_stable_graphs(datum_from_options(en_genus, en_weights));
    if (en_dot) {
      std::cout << export_dot(catalog);
      return 0;
    }
    if (as_json) {
      json out;
      out["datum"] = datum_json(catalog.datum);
      json layers = json::array();
      for (size_t layer = 0; layer < catalog.layers.size(); ++layer) {
        if (en_layer >= 0 && static_cast<int>(layer) != en_layer) continue;
        json jl = json::array();
        for (const auto& entry : catalog.layers[layer]) jl.push_back(graph_json(entry.graph));
        layers.push_back(std::move(jl));
      }
      out["layers"] = std::move(layers);
      std::cout << out.dump(2) << "\n";
    } else {
      print_layer_summary(catalog, std::cout);
      if (en_layer >= 0 && en_layer < static_cast<int>(catalog.layers.size())) {
        for (size_t pos = 0; pos < catalog.layers[en_layer].size(); ++pos)
          std::cout << "layer " << en_layer << " #" << pos << ": "
                    << catalog.layers[en_layer][pos].key << "\n";
      }
    }
    return 0;
  }

  if (*cmd_fvec) {
    GeneralizedConeComplex cx =
        build_complex(datum_from_options(fv_genus, fv_weights), false);
    auto fv = f_vector(cx);
    if (as_json) {
      json out;
      out["datum"] = datum_json(cx.datum);
      out["f_vector"] = fv;
      out["dimension"] = dimension(cx);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "f-vector:";
      for (auto c : fv) std::cout << " " << c;
      std::cout << "\ndimension: " << dimension(cx) << "\n";
    }
    return 0;
  }

  if (*cmd_locate) {
    GraphDocument doc = parse_graph(read_file(loc_curve));
    WeightData datum = resolve_datum(doc, loc_genus, loc_weights, !loc_gopt->empty(),
                                     !loc_wopt->empty());
    TropicalCurve curve = curve_or_unit(doc, loc_extended);
    GeneralizedConeComplex cx = build_complex(datum, loc_extended);
    LocateResult where = locate(cx, curve);
    auto [layer, pos] = cx.catalog.layer_pos(where.cone_id);
    if (as_json) {
      json out;
      out["cone"] = {{"layer", layer}, {"position", pos}, {"id", where.cone_id}};
      json coords = json::array();
      for (const auto& c : where.coordinates) coords.push_back(c.str());
      out["coordinates"] = std::move(coords);
      out["class"] = cx.catalog.entry(where.cone_id).key;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "cone: layer " << layer << " #" << pos << " (dim "
                << cx.cones[where.cone_id].dim << ")\ncoordinates:";
      for (const auto& c : where.coordinates) std::cout << " " << c.str();
      std::cout << "\n";
    }
    return 0;
  }

  if (*cmd_reduce) {
    GraphDocument doc = parse_graph(read_file(red_curve));
    int g = !red_gopt->empty() ? red_genus
                               : (doc.datum ? doc.datum->g : genus(doc.graph));
    WeightData from = WeightData::make(g, parse_weight_list(red_from));
    WeightData to = WeightData::make(g, parse_weight_list(red_to));
    TropicalCurve curve = curve_or_unit(doc, true);
    ReduceResult result = reduce_curve(curve, from, to);
    if (as_json) {
      json out;
      out["curve"] = curve_json(result.curve);
      out["input_class"] = result.report.input_class;
      out["output_class"] = result.report.output_class;
      json edges = json::array();
      for (const auto& t : result.report.edges) {
        json e;
        e["fate"] = t.fate == MapReport::Fate::Kept      ? "kept"
                    : t.fate == MapReport::Fate::Dropped ? "dropped"
                                                         : "merged";
        if (t.fate != MapReport::Fate::Dropped) e["output_edge"] = t.output_edge;
        if (t.fate == MapReport::Fate::Merged) e["merged_with"] = t.merged_with;
        edges.push_back(std::move(e));
      }
      out["edge_transforms"] = std::move(edges);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << curve_json(result.curve).dump(2) << "\n";
    }
    return 0;
  }

  if (*cmd_forget) {
    GraphDocument doc = parse_graph(read_file(fg_curve));
    WeightData datum =
        resolve_datum(doc, fg_genus, fg_weights, !fg_gopt->empty(), !fg_wopt->empty());
    std::vector<int> keep;
    {
      std::istringstream in(fg_keep);
      std::string item;
      while (std::getline(in, item, ',')) keep.push_back(std::stoi(item));
    }
    TropicalCurve curve = curve_or_unit(doc, true);
    TropicalCurve result = forget(curve, datum, keep);
    std::cout << curve_json(result).dump(2) << "\n";
    return 0;
  }

  if (*cmd_clutch) {
    GraphDocument gdoc = parse_graph(read_file(cl_graph));
    WeightData datum =
        resolve_datum(gdoc, cl_genus, cl_weights, !cl_gopt->empty(), !cl_wopt->empty());
    std::vector<TropicalCurve> parts;
    {
      std::istringstream in(cl_parts);
      std::string path;
      while (std::getline(in, path, ',')) {
        GraphDocument pdoc = parse_graph(read_file(path));
        parts.push_back(curve_or_unit(pdoc, true));
      }
    }
    TropicalCurve result = clutch_over(gdoc.graph, datum, parts);
    std::cout << curve_json(result).dump(2) << "\n";
    return 0;
  }

  if (*cmd_chamber) {
    if (*cmd_walls) {
      WallKind kind = ch_kind == "coarse" ? WallKind::Coarse : WallKind::Fine;
      WallSet w = walls(ch_genus, ch_n, kind);
      if (as_json) {
        json out;
        out["g"] = w.g;
        out["n"] = w.n;
        out["kind"] = ch_kind;
        out["walls"] = w.walls;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << w.walls.size() << " wall" << (w.walls.size() == 1 ? "" : "s")
                  << "\n";
        for (const auto& s : w.walls) {
          std::cout << "  {";
          for (size_t i = 0; i < s.size(); ++i) std::cout << (i ? "," : "") << s[i];
          std::cout << "}\n";
        }
      }
      return 0;
    }
    if (*cmd_chloc) {
      WallKind kind = chl_kind == "coarse" ? WallKind::Coarse : WallKind::Fine;
      WeightData a = datum_from_options(chl_genus, chl_weights);
      WallSet w = walls(a.g, a.leg_count(), kind);
      ChamberSignature sig = chamber_signature(a, w);
      if (as_json) {
        json out;
        json per_wall = json::array();
        for (size_t i = 0; i < w.walls.size(); ++i)
          per_wall.push_back({{"subset", w.walls[i]},
                              {"sign", sig.signs[i] > 0 ? "+" : "-"}});
        out["signature"] = std::move(per_wall);
        std::cout << out.dump(2) << "\n";
      } else {
        for (size_t i = 0; i < w.walls.size(); ++i) {
          std::cout << (sig.signs[i] > 0 ? "+" : "-") << " {";
          for (size_t j = 0; j < w.walls[i].size(); ++j)
            std::cout << (j ? "," : "") << w.walls[i][j];
          std::cout << "}\n";
        }
      }
      return 0;
    }
    if (*cmd_chdiff) {
      WeightData from = datum_from_options(chd_genus, chd_from);
      WeightData to = datum_from_options(chd_genus, chd_to);
      WallCrossDiff diff = wall_cross_diff(from, to);
      if (as_json) {
        json out;
        auto dump_side = [](const std::vector<std::vector<CatalogEntry>>& side) {
          json layers = json::array();
          for (const auto& layer : side) {
            json jl = json::array();
            for (const auto& entry : layer) jl.push_back(graph_json(entry.graph));
            layers.push_back(std::move(jl));
          }
          return layers;
        };
        out["lost"] = dump_side(diff.lost);
        out["gained"] = dump_side(diff.gained);
        std::cout << out.dump(2) << "\n";
      } else {
        long long lost = 0, gained = 0;
        for (const auto& layer : diff.lost) lost += static_cast<long long>(layer.size());
        for (const auto& layer : diff.gained)
          gained += static_cast<long long>(layer.size());
        std::cout << "lost: " << lost << "\ngained: " << gained << "\n";
        for (size_t l = 0; l < diff.lost.size(); ++l)
          for (const auto& entry : diff.lost[l])
            std::cout << "  lost (layer " << l << "): " << entry.key << "\n";
        for (size_t l = 0; l < diff.gained.size(); ++l)
          for (const auto& entry : diff.gained[l])
            std::cout << "  gained (layer " << l << "): " << entry.key << "\n";
      }
      return 0;
    }
  }

  if (*cmd_kapranov) {
    WeightData w = kapranov_weights(ka_n, ka_r, ka_s);
    if (as_json) {
      std::cout << datum_json(w).dump(2) << "\n";
    } else {
      for (size_t i = 0; i < w.weights.size(); ++i)
        std::cout << (i ? "," : "") << w.weights[i].str();
      std::cout << "\n";
    }
    return 0;
  }

  if (*cmd_lm) {
    if (lm_check) {
      LmCheckResult result = lm_fvector_check(lm_n);
      if (as_json) {
        json out;
        out["partition_counts"] = result.partition_counts;
        out["f_vector"] = result.complex_fvector;
        out["equal"] = result.passed();
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "partition counts:";
        for (auto c : result.partition_counts) std::cout << " " << c;
        std::cout << "\nf-vector:        ";
        for (auto c : result.complex_fvector) std::cout << " " << c;
        std::cout << "\nequal: " << (result.passed() ? "true" : "false") << "\n";
      }
      return result.passed() ? 0 : 1;
    }
    if (lm_graphs) {
      for (int k = 1; k <= lm_n; ++k)
        for (const auto& p : ordered_partitions(lm_n, k))
          std::cout << canonical_form(chain_graph(p, lm_n)).key << "\n";
      return 0;
    }
    WeightData w = lm_weights(lm_n);
    if (lm_fvec) {
      auto fv = f_vector(build_complex(w, false));
      std::cout << "f-vector:";
      for (auto c : fv) std::cout << " " << c;
      std::cout << "\n";
    } else {
      std::cout << datum_json(w).dump(2) << "\n";
    }
    return 0;
  }

  if (*cmd_export) {
    if (ex_catalog || ex_poset) {
      if (ex_weights.empty())
        throw ValidationError("catalog/poset export needs --genus and --weights");
      StableGraphCatalog catalog =
          enumerate_stable_graphs(datum_from_options(ex_genus, ex_weights));
      if (ex_poset)
        std::cout << export_dot(catalog, contraction_poset(catalog));
      else
        std::cout << export_dot(catalog);
      return 0;
    }
    if (ex_graph.empty())
      throw ValidationError("export needs --graph or --catalog/--poset");
    GraphDocument doc = parse_graph(read_file(ex_graph));
    std::cout << export_dot(doc.graph, doc.lengths ? &*doc.lengths : nullptr);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const OnWallError& e) {
    std::cerr << "on-wall: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
