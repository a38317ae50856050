#pragma once

#include <optional>

#include "sigraph/coloring.hpp"
#include "sigraph/oracle.hpp"
#include "sigraph/signed_graph.hpp"

namespace sigraph {

/// Every incidence gets color 0. Valid exactly when the graph is a matching:
/// 0 = -sign * 0 holds for either sign.
inline IncidenceColoring color_matching(const SignedGraph& g) {
  if (max_degree(g) > 1) throw std::invalid_argument("color_matching: maximum degree exceeds 1");
  if (g.m() == 0) throw std::invalid_argument("color_matching: graph has no edges");
  IncidenceColoring c;
  c.k = 1;
  c.values.assign(g.m(), {0, 0});
  return c;
}

namespace detail {

/// Color a walk-shaped chain of edges with values in {+-1}: pick +1 at the
/// first vertex, force the far end of each edge by the edge relation, and
/// enter each next edge with the opposite value at the shared vertex.
inline void color_chain(const SignedGraph& g, const std::vector<int>& order, bool closed,
                        IncidenceColoring& c) {
  int enter = 1;  // value at the near endpoint of the next edge
  std::size_t steps = closed ? order.size() : order.size() - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    int u = order[i];
    int v = order[(i + 1) % order.size()];
    int ei = g.edge_index(u, v);
    const Edge& e = g.edge(ei);
    int fu = enter;                 // value at u
    int fv = -e.sign * fu;          // forced at v
    if (e.u == u)
      c.values[ei] = {fu, fv};
    else
      c.values[ei] = {fv, fu};
    enter = -fv;  // distinctness at v: leave with the other value
  }
}

}  // namespace detail

/// 2-coloring of a signed path with values +-1 (1-coloring {0} for a single
/// edge). Uses exactly M_Delta.
inline IncidenceColoring color_path(const SignedGraph& g) {
  if (!is_path_graph(g) || g.m() == 0)
    throw std::invalid_argument("color_path: input is not a path with at least one edge");
  if (g.m() == 1) return color_matching(g);
  IncidenceColoring c;
  c.k = 2;
  c.values.assign(g.m(), {0, 0});
  detail::color_chain(g, path_order(g), /*closed=*/false, c);
  require_valid(g, c, "color_path");
  return c;
}

/// 2-coloring of a balanced signed cycle with values +-1. Construction:
/// switch to all-positive via the balance potential, walk the cycle giving
/// each edge +1 at its walk-start and -1 at its walk-end, then negate at the
/// switched vertices. Falls back to the exhaustive decision if the direct
/// scheme ever produced a seam conflict.
inline IncidenceColoring color_balanced_cycle(const SignedGraph& g) {
  if (!is_cycle_graph(g)) throw std::invalid_argument("color_balanced_cycle: input is not a cycle");
  if (!is_balanced(g)) throw std::invalid_argument("color_balanced_cycle: cycle is unbalanced");
  VertexSet x = switching_to_all_positive(g);
  SignedGraph pos = switched(g, x);
  IncidenceColoring c;
  c.k = 2;
  c.values.assign(g.m(), {0, 0});
  detail::color_chain(pos, cycle_order(pos), /*closed=*/true, c);
  c = negate_at(pos, c, x);
  if (!is_valid_coloring(g, c)) {
    auto fallback = decide_k_colorable(g, 2);
    if (!fallback) throw std::logic_error("color_balanced_cycle: balanced cycle must be 2-colorable");
    c = *fallback;
  }
  return c;
}

/// Delta-coloring of a signed forest: root each tree, walk top-down and hand
/// each child edge the first palette value unused at the parent; the child
/// end is forced and a fresh vertex carries no constraints.
inline IncidenceColoring color_signed_forest(const SignedGraph& g) {
  if (!is_forest(g)) throw std::invalid_argument("color_signed_forest: input has a cycle");
  int delta = max_degree(g);
  if (delta == 0) throw std::invalid_argument("color_signed_forest: graph has no edges");
  ColorSet palette = color_set(delta);
  IncidenceColoring c;
  c.k = delta;
  c.values.assign(g.m(), {0, 0});
  std::vector<char> visited(g.n(), 0);
  for (int root = 0; root < g.n(); ++root) {
    if (visited[root]) continue;
    // BFS; at each vertex the parent edge (if any) already fixed one value.
    std::vector<std::pair<int, int>> queue{{root, -1}};  // (vertex, parent edge)
    visited[root] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto [v, parent_edge] = queue[qi];
      std::vector<int> used;
      if (parent_edge >= 0) used.push_back(color_at(g, c, {v, parent_edge}));
      std::size_t next_color = 0;
      for (auto [w, ei] : g.adjacent(v)) {
        if (ei == parent_edge) continue;
        while (next_color < palette.members.size() &&
               std::find(used.begin(), used.end(), palette.members[next_color]) != used.end())
          ++next_color;
        int fv = palette.members.at(next_color++);
        int fw = -g.edge(ei).sign * fv;
        if (g.edge(ei).u == v)
          c.values[ei] = {fv, fw};
        else
          c.values[ei] = {fw, fv};
        visited[w] = 1;
        queue.push_back({w, ei});
      }
    }
  }
  require_valid(g, c, "color_signed_forest");
  return c;
}

/// Proper unsigned edge coloring of a forest with colors 1..Delta, root-down
/// greedy.
inline std::vector<int> greedy_tree_edge_coloring(const SignedGraph& g) {
  if (!is_forest(g)) throw std::invalid_argument("greedy_tree_edge_coloring: input has a cycle");
  int delta = max_degree(g);
  std::vector<int> color(g.m(), 0);
  std::vector<char> visited(g.n(), 0);
  for (int root = 0; root < g.n(); ++root) {
    if (visited[root]) continue;
    std::vector<std::pair<int, int>> queue{{root, -1}};
    visited[root] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto [v, parent_edge] = queue[qi];
      int next = 1;
      for (auto [w, ei] : g.adjacent(v)) {
        if (ei == parent_edge) continue;
        if (parent_edge >= 0 && next == color[parent_edge]) ++next;
        color[ei] = next++;
        visited[w] = 1;
        queue.push_back({w, ei});
      }
    }
  }
  for (int ci : color)
    if (ci < 1 || ci > delta) throw std::logic_error("greedy_tree_edge_coloring: exceeded Delta");
  return color;
}

/// Color a graph whose components are paths and balanced cycles with the
/// pair {+alpha, -alpha} (alpha >= 1), or a matching with {0} when alpha = 0.
/// The decomposition-based constructions lean on this for every layer.
inline IncidenceColoring color_with_pair(const SignedGraph& g, int alpha) {
  if (g.m() == 0) throw std::invalid_argument("color_with_pair: graph has no edges");
  IncidenceColoring c;
  if (alpha == 0) {
    c = color_matching(g);
    return c;
  }
  if (alpha < 0) throw std::invalid_argument("color_with_pair: negative magnitude");
  if (max_degree(g) > 2) throw std::invalid_argument("color_with_pair: maximum degree exceeds 2");
  c.k = 2 * alpha;
  c.values.assign(g.m(), {0, 0});
  for (const auto& comp : edge_components(g)) {
    Subgraph sub = edge_subgraph(g, comp);
    IncidenceColoring local;
    if (is_cycle_graph(sub.graph)) {
      local = color_balanced_cycle(sub.graph);  // throws on an unbalanced component
    } else if (sub.graph.m() == 1) {
      const Edge& e = sub.graph.edge(0);
      local.k = 2;
      local.values = {{1, -e.sign}};
    } else {
      local.k = 2;
      local.values.assign(sub.graph.m(), {0, 0});
      detail::color_chain(sub.graph, path_order(sub.graph), /*closed=*/false, local);
    }
    overlay_subcoloring(c, sub, scale_colors(local, alpha));
  }
  require_valid(g, c, "color_with_pair");
  return c;
}

/// Best-effort Delta-coloring: constructive for matchings, paths, forests and
/// balanced cycles, exhaustive search otherwise (guarded by edge count).
/// Returns nullopt when the graph needs Delta+1 colors.
inline std::optional<IncidenceColoring> delta_coloring(const SignedGraph& g,
                                                       int oracle_edge_guard = 24) {
  int delta = max_degree(g);
  if (delta == 0) throw std::invalid_argument("delta_coloring: graph has no edges");
  if (delta == 1) return color_matching(g);
  if (is_path_graph(g)) return color_path(g);
  if (is_forest(g)) return color_signed_forest(g);
  if (is_cycle_graph(g)) {
    if (!is_balanced(g)) return std::nullopt;
    return color_balanced_cycle(g);
  }
  if (g.m() > oracle_edge_guard)
    throw std::invalid_argument("delta_coloring: exhaustive search guard exceeded");
  return decide_k_colorable(g, delta);
}

}  // namespace sigraph
