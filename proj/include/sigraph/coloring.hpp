#pragma once

#include <array>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "sigraph/signed_graph.hpp"

namespace sigraph {

/// The symmetric palette M_k: {0, +-1, ..., +-l} for k = 2l+1 and
/// {+-1, ..., +-l} for k = 2l.
struct ColorSet {
  int k = 0;
  std::vector<int> members;  // in search order: 0 first when present, then +1,-1,+2,-2,...
};

inline ColorSet color_set(int k) {
  if (k < 1) throw std::invalid_argument("color_set: k must be positive");
  ColorSet cs;
  cs.k = k;
  if (k % 2 == 1) cs.members.push_back(0);
  for (int a = 1; a <= k / 2; ++a) {
    cs.members.push_back(a);
    cs.members.push_back(-a);
  }
  return cs;
}

inline bool color_in_set(int value, int k) {
  if (value == 0) return k % 2 == 1;
  return std::abs(value) <= k / 2;
}

/// Smallest k whose palette contains every listed value.
inline int min_palette(const std::vector<int>& values) {
  int l = 0;
  bool zero = false;
  for (int v : values) {
    l = std::max(l, std::abs(v));
    zero = zero || v == 0;
  }
  return zero ? 2 * l + 1 : 2 * l;
}

/// Incidence coloring of a host graph: one value per incidence, stored as
/// (value at u, value at v) per edge in the host's canonical edge order.
struct IncidenceColoring {
  int k = 0;
  std::vector<std::array<int, 2>> values;

  int at_u(int edge) const { return values.at(edge)[0]; }
  int at_v(int edge) const { return values.at(edge)[1]; }
};

inline int color_at(const SignedGraph& g, const IncidenceColoring& c, const Incidence& inc) {
  const Edge& e = g.edge(inc.edge);
  if (inc.vertex == e.u) return c.values.at(inc.edge)[0];
  if (inc.vertex == e.v) return c.values.at(inc.edge)[1];
  throw std::invalid_argument("color_at: vertex not an endpoint of edge");
}

inline std::vector<int> colors_used(const IncidenceColoring& c) {
  std::set<int> s;
  for (const auto& pv : c.values) {
    s.insert(pv[0]);
    s.insert(pv[1]);
  }
  return {s.begin(), s.end()};
}

/// Values appearing at vertex v, in edge order.
inline std::vector<int> colors_at_vertex(const SignedGraph& g, const IncidenceColoring& c, int v) {
  std::vector<int> out;
  for (auto [w, ei] : g.adjacent(v)) {
    (void)w;
    out.push_back(color_at(g, c, {v, ei}));
  }
  return out;
}

struct Violation {
  enum class Kind { kValueOutOfRange, kEdgeRelation, kVertexDistinctness };
  Kind kind;
  Incidence where;
  std::string message;
};

struct VerifyResult {
  bool ok = false;
  std::vector<Violation> violations;
};

/// Checks the three defining conditions: values lie in M_k, each edge uv has
/// f(u:uv) = -sign(uv) f(v:uv), and values at a vertex are pairwise distinct.
inline VerifyResult verify_coloring(const SignedGraph& g, const IncidenceColoring& c) {
  if (static_cast<int>(c.values.size()) != g.m())
    throw std::invalid_argument("verify_coloring: assignment not total over the edge list");
  VerifyResult res;
  for (int ei = 0; ei < g.m(); ++ei) {
    const Edge& e = g.edge(ei);
    int fu = c.values[ei][0], fv = c.values[ei][1];
    if (!color_in_set(fu, c.k))
      res.violations.push_back({Violation::Kind::kValueOutOfRange, {e.u, ei},
                                "value " + std::to_string(fu) + " outside M_" + std::to_string(c.k)});
    if (!color_in_set(fv, c.k))
      res.violations.push_back({Violation::Kind::kValueOutOfRange, {e.v, ei},
                                "value " + std::to_string(fv) + " outside M_" + std::to_string(c.k)});
    if (fu != -e.sign * fv)
      res.violations.push_back({Violation::Kind::kEdgeRelation, {e.u, ei},
                                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") violates f(u:e) = -sign(e) f(v:e)"});
  }
  for (int v = 0; v < g.n(); ++v) {
    std::vector<std::pair<int, int>> vals;  // (value, edge)
    for (auto [w, ei] : g.adjacent(v)) {
      (void)w;
      vals.push_back({color_at(g, c, {v, ei}), ei});
    }
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 1; i < vals.size(); ++i) {
      if (vals[i].first == vals[i - 1].first)
        res.violations.push_back({Violation::Kind::kVertexDistinctness, {v, vals[i].second},
                                  "vertex " + std::to_string(v) + " repeats color " +
                                      std::to_string(vals[i].first)});
    }
  }
  res.ok = res.violations.empty();
  return res;
}

inline bool is_valid_coloring(const SignedGraph& g, const IncidenceColoring& c) {
  return verify_coloring(g, c).ok;
}

inline void require_valid(const SignedGraph& g, const IncidenceColoring& c, const char* who) {
  VerifyResult r = verify_coloring(g, c);
  if (!r.ok)
    throw std::logic_error(std::string(who) + ": produced an invalid coloring (" +
                           r.violations.front().message + ")");
}

/// Move every positive value up and every negative value down by offset.
/// Rejects colorings that use 0, whose shift direction would be ambiguous.
inline IncidenceColoring shift_colors(const IncidenceColoring& c, int offset) {
  if (offset < 0) throw std::invalid_argument("shift_colors: negative offset");
  IncidenceColoring out = c;
  out.k = c.k + 2 * offset;
  for (auto& pv : out.values) {
    for (int& x : pv) {
      if (x == 0) throw std::invalid_argument("shift_colors: coloring uses color 0");
      x += (x > 0) ? offset : -offset;
    }
  }
  return out;
}

/// Multiply every value by a positive factor (palette scaling helper).
inline IncidenceColoring scale_colors(const IncidenceColoring& c, int factor) {
  if (factor < 1) throw std::invalid_argument("scale_colors: factor must be positive");
  IncidenceColoring out = c;
  out.k = 2 * ((c.k / 2) * factor) + (c.k % 2);
  for (auto& pv : out.values)
    for (int& x : pv) x *= factor;
  return out;
}

/// Transport a coloring across a switching: negate values at switched
/// vertices. Maps valid colorings of g to valid colorings of switched(g, x).
inline IncidenceColoring negate_at(const SignedGraph& g, const IncidenceColoring& c,
                                   const VertexSet& x) {
  IncidenceColoring out = c;
  for (int ei = 0; ei < g.m(); ++ei) {
    const Edge& e = g.edge(ei);
    if (x.contains(e.u)) out.values[ei][0] = -out.values[ei][0];
    if (x.contains(e.v)) out.values[ei][1] = -out.values[ei][1];
  }
  return out;
}

/// Copy a subgraph coloring back into a host coloring through the subgraph's
/// index maps.
inline void overlay_subcoloring(IncidenceColoring& host, const Subgraph& sub,
                                const IncidenceColoring& local) {
  if (static_cast<int>(local.values.size()) != sub.graph.m())
    throw std::invalid_argument("overlay_subcoloring: size mismatch");
  for (int le = 0; le < sub.graph.m(); ++le) host.values.at(sub.edges[le]) = local.values[le];
}

/// Union of per-part colorings over a valid decomposition. Each part coloring
/// is over edge_subgraph(g, d.parts[i]). The result is verified; a color
/// collision at a shared vertex is an error.
inline IncidenceColoring merge_colorings(const SignedGraph& g, const Decomposition& d,
                                         const std::vector<IncidenceColoring>& parts) {
  if (!validate_decomposition(g, d))
    throw std::invalid_argument("merge_colorings: not a decomposition");
  if (parts.size() != d.parts.size())
    throw std::invalid_argument("merge_colorings: one coloring per part required");
  IncidenceColoring out;
  out.values.assign(g.m(), {0, 0});
  std::vector<int> used;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Subgraph sub = edge_subgraph(g, d.parts[i]);
    overlay_subcoloring(out, sub, parts[i]);
    for (int v : colors_used(parts[i])) used.push_back(v);
  }
  out.k = min_palette(used);
  VerifyResult r = verify_coloring(g, out);
  if (!r.ok)
    throw std::invalid_argument("merge_colorings: parts collide (" + r.violations.front().message +
                                ")");
  return out;
}

/// Rewrite the 0-colored edges (always a matching) to the pair +-magnitude:
/// the canonically smaller endpoint gets +magnitude, the other end follows
/// the edge relation.
inline IncidenceColoring remap_zero_to_pair(const SignedGraph& g, const IncidenceColoring& c,
                                            int magnitude) {
  if (magnitude < 1) throw std::invalid_argument("remap_zero_to_pair: magnitude must be positive");
  IncidenceColoring out = c;
  for (int ei = 0; ei < g.m(); ++ei) {
    if (out.values[ei][0] == 0 && out.values[ei][1] == 0) {
      out.values[ei][0] = magnitude;
      out.values[ei][1] = -g.edge(ei).sign * magnitude;
    }
  }
  out.k = min_palette(colors_used(out));
  return out;
}

}  // namespace sigraph
