#pragma once

// Instance documents (JSON and DIMACS .col plus a JSON sidecar) and the JSON
// forms of vectors, colorings and certificates.
//
//   { "vertices": ["v1","v2",...],
//     "edges":    [["v1","v2"], ...],
//     "lists":    {"v1":[1,2], ...},
//     "weights":  {"v1":1, ...} }        // optional
//
// Vertex order in "vertices" is the canonical coordinate order.

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "coloring_value.hpp"
#include "errors.hpp"
#include "instance.hpp"
#include "permissible.hpp"
#include "vector_algebra.hpp"

namespace multicolor::io {

using Json = nlohmann::ordered_json;

namespace detail {

class NameIndex {
 public:
  explicit NameIndex(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!index_.emplace(names[i], i).second) throw InputError("duplicate vertex '" + names[i] + "'");
    }
  }

  Vertex at(const std::string& name, const char* where) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InputError(std::string("unknown vertex '") + name + "' in " + where);
    return it->second;
  }

 private:
  std::unordered_map<std::string, Vertex> index_;
};

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::vector<ColorSet> read_lists(const Json& doc, const NameIndex& index, std::size_t n) {
  std::vector<ColorSet> lists(n);
  if (!doc.contains("lists")) return lists;
  const Json& node = doc["lists"];
  if (!node.is_object()) throw InputError("\"lists\" must be an object");
  for (const auto& [name, colors] : node.items()) {
    Vertex v = index.at(name, "lists");
    if (!colors.is_array()) throw InputError("list of '" + name + "' must be an array");
    for (const auto& c : colors) {
      if (!c.is_number_integer()) throw InputError("colors must be integers (vertex '" + name + "')");
      auto value = c.get<std::int64_t>();
      if (value <= 0 || value > INT32_MAX) {
        throw InputError("colors must be positive, got " + std::to_string(value) + " at '" + name + "'");
      }
      lists[v].insert(static_cast<Color>(value));
    }
  }
  return lists;
}

inline std::optional<WeightVector> read_weights(const Json& doc, const NameIndex& index,
                                                const std::vector<std::string>& names) {
  if (!doc.contains("weights")) return std::nullopt;
  const Json& node = doc["weights"];
  if (!node.is_object()) throw InputError("\"weights\" must be an object");
  std::vector<WeightVector::value_type> coords(names.size(), 0);
  std::vector<char> seen(names.size(), 0);
  for (const auto& [name, value] : node.items()) {
    Vertex v = index.at(name, "weights");
    if (!value.is_number_integer()) throw InputError("weight of '" + name + "' must be an integer");
    auto x = value.get<std::int64_t>();
    if (x < 0) throw InputError("negative weight " + std::to_string(x) + " at '" + name + "'");
    coords[v] = x;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!seen[i]) throw InputError("missing weight for vertex '" + names[i] + "'");
  }
  return WeightVector(std::move(coords));
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
  const Json doc = detail::parse_json(text);
  if (!doc.is_object()) throw InputError("instance document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw InputError("missing \"vertices\" array");

  std::vector<std::string> names;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw InputError("vertex identifiers must be strings");
    names.push_back(v.get<std::string>());
  }
  const detail::NameIndex index(names);

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw InputError("each edge must be a pair of vertex identifiers");
      }
      edges.emplace_back(index.at(e[0].get<std::string>(), "edges"), index.at(e[1].get<std::string>(), "edges"));
    }
  }
  auto lists = detail::read_lists(doc, index, names.size());
  auto weights = detail::read_weights(doc, index, names);
  Graph graph(names.size(), edges);
  return make_instance(std::move(graph), ListAssignment(std::move(lists)), std::move(weights), std::move(names));
}

/// DIMACS graph ("p edge n m", "e u v"). Vertices are named "1".."n"; repeated
/// edges (either orientation) are merged.
inline Graph parse_dimacs(const std::string& text, std::vector<std::string>* names = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      std::size_t vertices = 0, m = 0;
      if (!(ls >> kind >> vertices >> m)) throw InputError("bad problem line " + std::to_string(lineno));
      n = vertices;
    } else if (tag == "e") {
      if (!n) throw InputError("edge before problem line at line " + std::to_string(lineno));
      long u = 0, v = 0;
      if (!(ls >> u >> v)) throw InputError("bad edge line " + std::to_string(lineno));
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > *n || static_cast<std::size_t>(v) > *n) {
        throw InputError("unknown vertex in edge at line " + std::to_string(lineno));
      }
      if (u == v) throw InputError("self-loop at line " + std::to_string(lineno));
      Vertex a = static_cast<Vertex>(std::min(u, v) - 1), b = static_cast<Vertex>(std::max(u, v) - 1);
      edges.emplace_back(a, b);
    } else {
      throw InputError("unrecognised DIMACS line " + std::to_string(lineno));
    }
  }
  if (!n) throw InputError("DIMACS input has no problem line");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (names) {
    names->clear();
    for (std::size_t i = 1; i <= *n; ++i) names->push_back(std::to_string(i));
  }
  return Graph(*n, edges);
}

/// DIMACS graph plus a sidecar {"lists":{...}, "weights":{...}} keyed by "1".."n".
inline Instance parse_dimacs_instance(const std::string& dimacs, const std::string& sidecar) {
  std::vector<std::string> names;
  Graph g = parse_dimacs(dimacs, &names);
  const Json doc = sidecar.empty() ? Json::object() : detail::parse_json(sidecar);
  if (!doc.is_object()) throw InputError("sidecar must be a JSON object");
  const detail::NameIndex index(names);
  auto lists = detail::read_lists(doc, index, names.size());
  auto weights = detail::read_weights(doc, index, names);
  return make_instance(std::move(g), ListAssignment(std::move(lists)), std::move(weights), std::move(names));
}

inline Json vector_json(const WeightVector& v) { return Json(v.coords()); }

inline Json coloring_json(const Instance& inst, const Coloring& c) {
  Json out = Json::object();
  for (Vertex v = 0; v < c.size(); ++v) out[inst.names.at(v)] = std::vector<Color>(c[v].begin(), c[v].end());
  return out;
}

inline Json certificate_json(const Instance& inst, const Certificate& cert) {
  Json out = Json::object();
  for (const auto& [color, members] : cert) {
    Json names = Json::array();
    for (Vertex v : members) names.push_back(inst.names.at(v));
    out[std::to_string(color)] = std::move(names);
  }
  return out;
}

inline Json instance_json(const Instance& inst) {
  Json doc = Json::object();
  doc["vertices"] = inst.names;
  Json edges = Json::array();
  for (auto [u, v] : inst.graph.edges()) edges.push_back(Json::array({inst.names[u], inst.names[v]}));
  doc["edges"] = std::move(edges);
  Json lists = Json::object();
  for (Vertex v = 0; v < inst.size(); ++v) {
    lists[inst.names[v]] = std::vector<Color>(inst.lists[v].begin(), inst.lists[v].end());
  }
  doc["lists"] = std::move(lists);
  if (inst.weights) {
    Json weights = Json::object();
    for (Vertex v = 0; v < inst.size(); ++v) weights[inst.names[v]] = (*inst.weights)[v];
    doc["weights"] = std::move(weights);
  }
  return doc;
}

inline std::string serialize_instance(const Instance& inst) { return instance_json(inst).dump(); }

/// {"v1":[1], ...}; vertices absent from the document get the empty set.
inline Coloring parse_coloring(const std::string& text, const Instance& inst) {
  const Json doc = detail::parse_json(text);
  if (!doc.is_object()) throw InputError("coloring document must be a JSON object");
  const detail::NameIndex index(inst.names);
  Coloring out(inst.size());
  for (const auto& [name, colors] : doc.items()) {
    Vertex v = index.at(name, "coloring");
    if (!colors.is_array()) throw InputError("colors of '" + name + "' must be an array");
    for (const auto& c : colors) {
      if (!c.is_number_integer() || c.get<std::int64_t>() <= 0) throw InputError("colors must be positive integers");
      out[v].insert(c.get<Color>());
    }
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace multicolor::io
