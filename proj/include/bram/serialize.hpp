#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bram/common.hpp"
#include "bram/graph.hpp"
#include "bram/pattern.hpp"

namespace bram {

// All emitters build nlohmann::ordered_json with a fixed key order so that
// serialized output is byte-stable; parsers accept any key order.
using Json = nlohmann::ordered_json;

enum class CertificateKind { GoodColoring, ExtremalGraph, CountingUpperBound, LllLowerBound, Embedding };

inline const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::GoodColoring: return "good-coloring";
    case CertificateKind::ExtremalGraph: return "extremal-graph";
    case CertificateKind::CountingUpperBound: return "counting-upper-bound";
    case CertificateKind::LllLowerBound: return "lll-lower-bound";
    case CertificateKind::Embedding: return "embedding";
  }
  return "?";
}

inline CertificateKind certificate_kind_from_string(const std::string& s) {
  if (s == "good-coloring") return CertificateKind::GoodColoring;
  if (s == "extremal-graph") return CertificateKind::ExtremalGraph;
  if (s == "counting-upper-bound") return CertificateKind::CountingUpperBound;
  if (s == "lll-lower-bound") return CertificateKind::LllLowerBound;
  if (s == "embedding") return CertificateKind::Embedding;
  throw ParseError("certificate field 'kind': unknown value '" + s + "'");
}

/// Self-contained, independently re-verifiable witness of a claimed bound.
/// The stamp is empty unless explicitly requested, keeping output bytes
/// reproducible for identical argv and seed.
struct Certificate {
  CertificateKind kind = CertificateKind::GoodColoring;
  std::vector<std::string> claims;
  Json payload;
  std::optional<std::uint64_t> seed;
  std::string tool = kToolVersion;
  std::string stamp;
};

namespace detail {

inline const Json& require_field(const Json& j, const char* name, const char* where) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string(where) + ": missing field '" + name + "'");
  return *it;
}

inline long long require_int(const Json& j, const char* name, const char* where) {
  const Json& f = require_field(j, name, where);
  if (!f.is_number_integer()) throw ParseError(std::string(where) + ": field '" + name + "' must be an integer");
  return f.get<long long>();
}

}  // namespace detail

inline Json graph_to_json(const BipartiteGraph& g) {
  Json j;
  j["left"] = g.left_size();
  j["right"] = g.right_size();
  Json edges = Json::array();
  for (auto [u, v] : g.edges_lex()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

inline BipartiteGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("graph: expected an object");
  long long left = detail::require_int(j, "left", "graph");
  long long right = detail::require_int(j, "right", "graph");
  if (left < 0 || right < 0) throw ParseError("graph: fields 'left'/'right' must be >= 0");
  const Json& edges = detail::require_field(j, "edges", "graph");
  if (!edges.is_array()) throw ParseError("graph: field 'edges' must be an array");
  BipartiteGraph g(static_cast<int>(left), static_cast<int>(right));
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("graph: field 'edges' entries must be [u,v] integer pairs");
    long long u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || u >= left || v < 0 || v >= right)
      throw ParseError("graph: field 'edges' contains out-of-range edge (" + std::to_string(u) +
                       "," + std::to_string(v) + ")");
    g.add_edge(int(u), int(v));
  }
  return g;
}

inline Json coloring_to_json(const EdgeColoring& c) {
  Json j;
  j["n"] = c.host_side();
  j["colors"] = c.num_colors();
  Json rows = Json::array();
  for (int u = 0; u < c.host_side(); ++u) {
    Json row = Json::array();
    for (int v = 0; v < c.host_side(); ++v) row.push_back(c.color(u, v));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

inline EdgeColoring coloring_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("coloring: expected an object");
  long long n = detail::require_int(j, "n", "coloring");
  long long colors = detail::require_int(j, "colors", "coloring");
  if (n < 0) throw ParseError("coloring: field 'n' must be >= 0");
  if (colors < 2) throw ParseError("coloring: field 'colors' must be >= 2");
  const Json& m = detail::require_field(j, "matrix", "coloring");
  if (!m.is_array() || m.size() != std::size_t(n))
    throw ParseError("coloring: field 'matrix' must have n rows");
  EdgeColoring c(static_cast<int>(n), static_cast<int>(colors));
  for (int u = 0; u < n; ++u) {
    const Json& row = m[u];
    if (!row.is_array() || row.size() != std::size_t(n))
      throw ParseError("coloring: field 'matrix' row " + std::to_string(u) + " must have n entries");
    for (int v = 0; v < n; ++v) {
      if (!row[v].is_number_integer())
        throw ParseError("coloring: field 'matrix' entries must be integers");
      long long col = row[v].get<long long>();
      if (col < 0 || col >= colors)
        throw ParseError("coloring: field 'matrix' color " + std::to_string(col) + " out of range");
      c.set_color(u, v, int(col));
    }
  }
  return c;
}

inline Json witness_to_json(const PatternWitness& w) {
  Json j;
  switch (w.kind) {
    case WitnessKind::Biclique:
      j["kind"] = "biclique";
      j["left"] = w.left;
      j["right"] = w.right;
      break;
    case WitnessKind::Cycle:
      j["kind"] = "cycle";
      j["vertices"] = w.cycle;
      break;
    case WitnessKind::Generic:
      j["kind"] = "generic";
      j["map_left"] = w.map_left;
      j["map_right"] = w.map_right;
      j["flipped"] = w.flipped;
      break;
  }
  return j;
}

inline PatternWitness witness_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("witness: expected an object");
  const Json& kind = detail::require_field(j, "kind", "witness");
  PatternWitness w;
  auto ints = [](const Json& a, const char* name) {
    if (!a.is_array()) throw ParseError(std::string("witness: field '") + name + "' must be an array");
    std::vector<int> out;
    for (const Json& x : a) {
      if (!x.is_number_integer()) throw ParseError(std::string("witness: field '") + name + "' entries must be integers");
      out.push_back(x.get<int>());
    }
    return out;
  };
  if (kind == "biclique") {
    w.kind = WitnessKind::Biclique;
    w.left = ints(detail::require_field(j, "left", "witness"), "left");
    w.right = ints(detail::require_field(j, "right", "witness"), "right");
  } else if (kind == "cycle") {
    w.kind = WitnessKind::Cycle;
    w.cycle = ints(detail::require_field(j, "vertices", "witness"), "vertices");
  } else if (kind == "generic") {
    w.kind = WitnessKind::Generic;
    w.map_left = ints(detail::require_field(j, "map_left", "witness"), "map_left");
    w.map_right = ints(detail::require_field(j, "map_right", "witness"), "map_right");
    const Json& f = detail::require_field(j, "flipped", "witness");
    if (!f.is_boolean()) throw ParseError("witness: field 'flipped' must be a boolean");
    w.flipped = f.get<bool>();
  } else {
    throw ParseError("witness: field 'kind' has unknown value");
  }
  return w;
}

inline Json certificate_to_json(const Certificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["claims"] = c.claims;
  j["payload"] = c.payload;
  Json meta;
  if (c.seed)
    meta["seed"] = *c.seed;
  else
    meta["seed"] = nullptr;
  meta["tool"] = c.tool;
  meta["stamp"] = c.stamp;
  j["meta"] = std::move(meta);
  return j;
}

inline Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("certificate: expected an object");
  Certificate c;
  const Json& kind = detail::require_field(j, "kind", "certificate");
  if (!kind.is_string()) throw ParseError("certificate: field 'kind' must be a string");
  c.kind = certificate_kind_from_string(kind.get<std::string>());
  const Json& claims = detail::require_field(j, "claims", "certificate");
  if (!claims.is_array()) throw ParseError("certificate: field 'claims' must be an array");
  for (const Json& s : claims) {
    if (!s.is_string()) throw ParseError("certificate: field 'claims' entries must be strings");
    c.claims.push_back(s.get<std::string>());
  }
  c.payload = detail::require_field(j, "payload", "certificate");
  const Json& meta = detail::require_field(j, "meta", "certificate");
  if (!meta.is_object()) throw ParseError("certificate: field 'meta' must be an object");
  auto seed = meta.find("seed");
  if (seed != meta.end() && !seed->is_null()) {
    if (!seed->is_number_integer()) throw ParseError("certificate: field 'meta.seed' must be an integer or null");
    c.seed = seed->get<std::uint64_t>();
  }
  auto tool = meta.find("tool");
  if (tool != meta.end() && tool->is_string()) c.tool = tool->get<std::string>();
  auto stamp = meta.find("stamp");
  if (stamp != meta.end() && stamp->is_string()) c.stamp = stamp->get<std::string>();
  return c;
}

inline std::string encode(const BipartiteGraph& g) { return graph_to_json(g).dump(); }

inline BipartiteGraph decode(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph: invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("file '" + path + "': invalid JSON: " + e.what());
  }
}

}  // namespace bram
