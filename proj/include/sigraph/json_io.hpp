#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "sigraph/coloring.hpp"
#include "sigraph/signed_graph.hpp"

namespace sigraph {

using nlohmann::json;

/// Graph wire format: {"n": <int>, "edges": [[u, v, s], ...]} with 0-based
/// ids and s in {1, -1}. Unsorted input is canonicalized; duplicates,
/// self-loops and bad signs are rejected.
inline json to_json(const SignedGraph& g) {
  json j;
  j["n"] = g.n();
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v, e.sign});
  return j;
}

inline SignedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph json: expected {\"n\": ..., \"edges\": [...]}");
  if (!j["n"].is_number_integer()) throw std::invalid_argument("graph json: n must be an integer");
  int n = j["n"].get<int>();
  std::vector<Edge> es;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 3)
      throw std::invalid_argument("graph json: each edge must be [u, v, s]");
    es.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<int>()});
  }
  return SignedGraph(n, std::move(es));  // constructor enforces the invariants
}

/// Coloring wire format: {"k": <int>, "values": [[u, v, f_at_u, f_at_v], ...]}
/// in canonical edge order.
inline json to_json(const SignedGraph& g, const IncidenceColoring& c) {
  if (static_cast<int>(c.values.size()) != g.m())
    throw std::invalid_argument("coloring json: coloring does not match graph");
  json j;
  j["k"] = c.k;
  j["values"] = json::array();
  for (int ei = 0; ei < g.m(); ++ei) {
    const Edge& e = g.edge(ei);
    j["values"].push_back({e.u, e.v, c.values[ei][0], c.values[ei][1]});
  }
  return j;
}

/// Parse a coloring against its host graph; the edge lists must agree.
inline IncidenceColoring coloring_from_json(const SignedGraph& g, const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("values"))
    throw std::invalid_argument("coloring json: expected {\"k\": ..., \"values\": [...]}");
  IncidenceColoring c;
  c.k = j["k"].get<int>();
  const auto& vals = j["values"];
  if (static_cast<int>(vals.size()) != g.m())
    throw std::invalid_argument("coloring json: value count does not match edge count");
  c.values.resize(g.m());
  for (int ei = 0; ei < g.m(); ++ei) {
    const auto& item = vals[ei];
    if (!item.is_array() || item.size() != 4)
      throw std::invalid_argument("coloring json: each entry must be [u, v, f_u, f_v]");
    const Edge& e = g.edge(ei);
    if (item[0].get<int>() != e.u || item[1].get<int>() != e.v)
      throw std::invalid_argument("coloring json: edge list does not match graph");
    c.values[ei] = {item[2].get<int>(), item[3].get<int>()};
  }
  return c;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace sigraph
