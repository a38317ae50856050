#pragma once

#include <optional>
#include <string>

#include "sigraph/base_colorings.hpp"
#include "sigraph/coloring.hpp"
#include "sigraph/oracle.hpp"
#include "sigraph/products.hpp"

namespace sigraph {

/// Result of a constructive classification: either a verified Delta-coloring
/// or a certified "needs Delta+1" with a machine-checkable reason string.
struct TheoremOutcome {
  enum class Claim { kDelta, kDeltaPlusOne };
  Claim claim = Claim::kDelta;
  std::optional<IncidenceColoring> coloring;  // present iff claim == kDelta
  std::string certificate;
};

/// Lower-bound certificate: an even-regular graph with an odd number of
/// negative edges cannot be colored with Delta colors.
inline std::optional<std::string> parity_lower_bound(const SignedGraph& g) {
  int d = 0;
  if (!is_regular(g, &d) || d == 0 || d % 2 != 0) return std::nullopt;
  if (negative_edge_count(g) % 2 == 0) return std::nullopt;
  return "odd-negative-count-in-" + std::to_string(d) + "-regular-graph";
}

namespace detail {

inline void require_delta_coloring(const SignedGraph& g, const IncidenceColoring& c,
                                   const char* who) {
  if (c.k != max_degree(g))
    throw std::invalid_argument(std::string(who) + ": input is not a Delta-coloring");
  if (!is_valid_coloring(g, c))
    throw std::invalid_argument(std::string(who) + ": input coloring is invalid");
}

inline int shift_away_from_zero(int x, int offset) {
  if (x == 0) return 0;
  return x > 0 ? x + offset : x - offset;
}

/// Move a coloring of product(b, a) to product(a, b) through (i,j) -> (j,i).
inline IncidenceColoring transpose_pair_coloring(const ProductGraph& from, const ProductGraph& to,
                                                 const IncidenceColoring& c) {
  IncidenceColoring out;
  out.k = c.k;
  out.values.assign(to.graph.m(), {0, 0});
  for (int fe = 0; fe < from.graph.m(); ++fe) {
    const Edge& e = from.graph.edge(fe);
    int tu = to.pair_vertex(from.second_coordinate(e.u), from.first_coordinate(e.u));
    int tv = to.pair_vertex(from.second_coordinate(e.v), from.first_coordinate(e.v));
    int te = to.graph.edge_index(tu, tv);
    if (te < 0) throw std::logic_error("transpose_pair_coloring: edge missing in transpose");
    if (tu < tv)
      out.values[te] = c.values[fe];
    else
      out.values[te] = {c.values[fe][1], c.values[fe][0]};
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cartesian products
// ---------------------------------------------------------------------------

/// Combine Delta-colorings of the factors into a Delta(S1)+Delta(S2)-coloring
/// of the cartesian product. When one factor degree is even its coloring is
/// magnitude-shifted past the other palette; when both are odd the zero
/// palette collides, and the edges whose incidences both received 0 form a
/// graph whose components are single edges or balanced 4-cycles, recolored
/// with the one remaining free pair.
inline IncidenceColoring color_cartesian_combined(const SignedGraph& s1,
                                                  const IncidenceColoring& c1,
                                                  const SignedGraph& s2,
                                                  const IncidenceColoring& c2) {
  int d1 = max_degree(s1), d2 = max_degree(s2);
  if (d1 < 1 || d2 < 1)
    throw std::invalid_argument("color_cartesian_combined: factors need edges");
  detail::require_delta_coloring(s1, c1, "color_cartesian_combined");
  detail::require_delta_coloring(s2, c2, "color_cartesian_combined");

  ProductGraph p = cartesian(s1, s2);
  int delta = d1 + d2;
  IncidenceColoring out;
  out.k = delta;
  out.values.assign(p.graph.m(), {0, 0});

  // offsets for the copies of each factor; exactly one side shifts
  int off1 = 0, off2 = 0;
  bool both_odd = (d1 % 2 == 1) && (d2 % 2 == 1);
  if (d2 % 2 == 0)
    off2 = d1 / 2;
  else if (d1 % 2 == 0)
    off1 = d2 / 2;
  else
    off2 = d1 / 2;  // both odd: zeros of both survive into the repair graph

  int n2 = s2.n();
  for (int e1 = 0; e1 < s1.m(); ++e1) {  // copies of S1
    const Edge& f = s1.edge(e1);
    for (int j = 0; j < n2; ++j) {
      int pe = p.graph.edge_index(f.u * n2 + j, f.v * n2 + j);
      out.values[pe] = {detail::shift_away_from_zero(c1.values[e1][0], off1),
                        detail::shift_away_from_zero(c1.values[e1][1], off1)};
    }
  }
  for (int e2 = 0; e2 < s2.m(); ++e2) {  // copies of S2
    const Edge& f = s2.edge(e2);
    for (int i = 0; i < s1.n(); ++i) {
      int pe = p.graph.edge_index(i * n2 + f.u, i * n2 + f.v);
      out.values[pe] = {detail::shift_away_from_zero(c2.values[e2][0], off2),
                        detail::shift_away_from_zero(c2.values[e2][1], off2)};
    }
  }

  if (both_odd) {
    std::vector<int> zero_edges;
    for (int ei = 0; ei < p.graph.m(); ++ei)
      if (out.values[ei][0] == 0 && out.values[ei][1] == 0) zero_edges.push_back(ei);
    int pair_magnitude = d1 / 2 + d2 / 2 + 1;
    Subgraph zg = edge_subgraph(p.graph, zero_edges);
    for (const auto& comp : edge_components(zg.graph)) {
      Subgraph cs = edge_subgraph(zg.graph, comp);
      IncidenceColoring local;
      if (cs.graph.m() == 1) {
        const Edge& e = cs.graph.edge(0);
        local.k = 2 * pair_magnitude;
        local.values = {{pair_magnitude, -e.sign * pair_magnitude}};
      } else if (is_cycle_graph(cs.graph) && cs.graph.m() == 4 && is_balanced(cs.graph)) {
        local = scale_colors(color_balanced_cycle(cs.graph), pair_magnitude);
      } else {
        throw std::logic_error(
            "color_cartesian_combined: zero graph component is neither an edge nor a balanced C4");
      }
      for (int le = 0; le < cs.graph.m(); ++le)
        out.values[zg.edges[cs.edges[le]]] = local.values[le];
    }
  }

  require_valid(p.graph, out, "color_cartesian_combined");
  return out;
}

namespace detail {

/// Decomposition-based 4-coloring core shared by the explicit cycle-product
/// constructions: color H1 with {+-1}, the complement with {+-2} (or {0} when
/// the complement is a matching), then merge and verify.
inline std::pair<Decomposition, IncidenceColoring> two_layer_coloring(
    const SignedGraph& g, std::vector<int> h1_edges, bool complement_is_matching,
    const char* who) {
  std::sort(h1_edges.begin(), h1_edges.end());
  std::vector<char> in_h1(g.m(), 0);
  for (int ei : h1_edges) {
    if (in_h1[ei]) throw std::logic_error(std::string(who) + ": duplicate H1 edge");
    in_h1[ei] = 1;
  }
  std::vector<int> h2_edges;
  for (int ei = 0; ei < g.m(); ++ei)
    if (!in_h1[ei]) h2_edges.push_back(ei);

  Decomposition d{{h1_edges, h2_edges}};
  Subgraph h1 = edge_subgraph(g, h1_edges);
  Subgraph h2 = edge_subgraph(g, h2_edges);
  IncidenceColoring ch1 = color_with_pair(h1.graph, 1);
  IncidenceColoring ch2 = complement_is_matching ? color_matching(h2.graph)
                                                 : color_with_pair(h2.graph, 2);
  IncidenceColoring out = merge_colorings(g, d, {ch1, ch2});
  out.k = max_degree(g);
  require_valid(g, out, who);
  return {d, out};
}

}  // namespace detail

/// Delta-coloring of P_r box C_s (r >= 2). H1 takes all cycle-copy arcs
/// except the seam column plus path rungs at the two seam columns between
/// row pairs (0,1),(2,3),...; its components are balanced 2s-cycles and at
/// most one path. The complement splits into seam edges, interior path
/// copies and balanced 4-cycles; for r = 2 it is a matching colored {0}.
inline IncidenceColoring color_cartesian_path_cycle(int r, const std::vector<int>& sig1, int s,
                                                    const std::vector<int>& sig2) {
  if (r < 2) throw std::invalid_argument("color_cartesian_path_cycle: path factor needs r >= 2");
  SignedGraph path = make_path(r, sig1);
  SignedGraph cyc = make_cycle(s, sig2);
  ProductGraph p = cartesian(path, cyc);
  auto vid = [&](int i, int j) { return p.pair_vertex(i, j); };

  std::vector<int> h1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j + 1 < s; ++j) h1.push_back(p.graph.edge_index(vid(i, j), vid(i, j + 1)));
  for (int i = 0; 2 * i + 1 < r; ++i)
    for (int j : {0, s - 1}) h1.push_back(p.graph.edge_index(vid(2 * i, j), vid(2 * i + 1, j)));

  auto [d, out] = detail::two_layer_coloring(p.graph, h1, /*complement_is_matching=*/r == 2,
                                             "color_cartesian_path_cycle");
  (void)d;
  return out;
}

/// Decomposition of C_even box C_even into two spanning 2-regular layers of
/// balanced 4-cycles, colored {+-1} and {+-2}.
inline std::pair<Decomposition, IncidenceColoring> decompose_even_even(
    const std::vector<int>& sig1, const std::vector<int>& sig2) {
  int n1 = static_cast<int>(sig1.size());
  int n2 = static_cast<int>(sig2.size());
  if (n1 < 4 || n1 % 2 != 0 || n2 < 4 || n2 % 2 != 0)
    throw std::invalid_argument("decompose_even_even: both cycles must have even length >= 4");
  SignedGraph c1 = make_cycle(n1, sig1);
  SignedGraph c2 = make_cycle(n2, sig2);
  ProductGraph p = cartesian(c1, c2);
  auto vid = [&](int i, int j) { return p.pair_vertex(i, j); };
  auto ei = [&](int a, int b, int c, int d) {
    int idx = p.graph.edge_index(vid(a, b), vid(c, d));
    if (idx < 0) throw std::logic_error("decompose_even_even: expected product edge missing");
    return idx;
  };

  int r = n1 / 2, s = n2 / 2;
  std::vector<int> h1;
  // corner 4-cycle through both seams
  h1.push_back(ei(0, 0, 0, n2 - 1));
  h1.push_back(ei(0, n2 - 1, n1 - 1, n2 - 1));
  h1.push_back(ei(n1 - 1, n2 - 1, n1 - 1, 0));
  h1.push_back(ei(n1 - 1, 0, 0, 0));
  // 4-cycles through the second-factor seam, row pairs (1,2),(3,4),...
  for (int i = 1; i < r; ++i) {
    h1.push_back(ei(2 * i - 1, 0, 2 * i - 1, n2 - 1));
    h1.push_back(ei(2 * i - 1, n2 - 1, 2 * i, n2 - 1));
    h1.push_back(ei(2 * i, n2 - 1, 2 * i, 0));
    h1.push_back(ei(2 * i, 0, 2 * i - 1, 0));
  }
  // 4-cycles through the first-factor seam, column pairs (1,2),(3,4),...
  for (int j = 1; j < s; ++j) {
    h1.push_back(ei(0, 2 * j - 1, 0, 2 * j));
    h1.push_back(ei(0, 2 * j, n1 - 1, 2 * j));
    h1.push_back(ei(n1 - 1, 2 * j, n1 - 1, 2 * j - 1));
    h1.push_back(ei(n1 - 1, 2 * j - 1, 0, 2 * j - 1));
  }
  // interior unit squares on odd/even row and column pairs
  for (int i = 1; i < r; ++i)
    for (int j = 1; j < s; ++j) {
      h1.push_back(ei(2 * i - 1, 2 * j - 1, 2 * i - 1, 2 * j));
      h1.push_back(ei(2 * i - 1, 2 * j, 2 * i, 2 * j));
      h1.push_back(ei(2 * i, 2 * j, 2 * i, 2 * j - 1));
      h1.push_back(ei(2 * i, 2 * j - 1, 2 * i - 1, 2 * j - 1));
    }

  // sanity on the layer structure before coloring
  {
    Subgraph hs = edge_subgraph(p.graph, h1);
    int deg = 0;
    if (static_cast<int>(hs.vertices.size()) != p.graph.n() || !is_regular(hs.graph, &deg) ||
        deg != 2)
      throw std::logic_error("decompose_even_even: first layer is not spanning 2-regular");
    if (static_cast<int>(edge_components(hs.graph).size()) != r * s)
      throw std::logic_error("decompose_even_even: unexpected cycle count in first layer");
  }
  return detail::two_layer_coloring(p.graph, h1, /*complement_is_matching=*/false,
                                    "decompose_even_even");
}

/// Switching set that turns the product of two odd unbalanced cycles into an
/// all-negative graph: lift each factor's all-negative switching across all
/// copies and take the symmetric difference.
inline VertexSet switch_to_all_negative(int r, const std::vector<int>& sig1, int s,
                                        const std::vector<int>& sig2) {
  if (r % 2 == 0 || s % 2 == 0)
    throw std::invalid_argument("switch_to_all_negative: both cycles must be odd");
  SignedGraph c1 = make_cycle(r, sig1);
  SignedGraph c2 = make_cycle(s, sig2);
  if (is_balanced(c1) || is_balanced(c2))
    throw std::invalid_argument("switch_to_all_negative: both factors must be unbalanced");

  // potential making an odd unbalanced cycle all-negative: walk and force
  // sign'(i, i+1) = -1; the seam closes exactly because the cycle is unbalanced
  auto all_negative_potential = [](const SignedGraph& c, const std::vector<int>& walk_signs) {
    int n = static_cast<int>(walk_signs.size());
    std::vector<int> h(n, 1);
    for (int i = 0; i + 1 < n; ++i) h[i + 1] = -walk_signs[i] * h[i];
    if (-walk_signs[n - 1] * h[n - 1] != h[0])
      throw std::logic_error("switch_to_all_negative: seam failed to close");
    (void)c;
    return h;
  };
  std::vector<int> h1 = all_negative_potential(c1, sig1);
  std::vector<int> h2 = all_negative_potential(c2, sig2);

  ProductGraph p = cartesian(c1, c2);
  VertexSet x(p.graph.n());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j)
      if ((h1[i] < 0) != (h2[j] < 0)) x.set(p.pair_vertex(i, j));

  SignedGraph check = switched(p.graph, x);
  if (negative_edge_count(check) != check.m())
    throw std::logic_error("switch_to_all_negative: switching did not reach all-negative");
  return x;
}

namespace detail {

/// Explicit layer decomposition for C_even (balanced) box C_odd (unbalanced):
/// H1 is made of r vertex-disjoint balanced cycles, each covering one even
/// row pair minus one arc column; the complement splits into copies of the
/// balanced even cycle, one corner 4-cycle and interior 4-cycles.
inline IncidenceColoring color_even_balanced_odd_unbalanced(const std::vector<int>& sig_even,
                                                            const std::vector<int>& sig_odd) {
  int n1 = static_cast<int>(sig_even.size());
  int n2 = static_cast<int>(sig_odd.size());
  SignedGraph c1 = make_cycle(n1, sig_even);
  SignedGraph c2 = make_cycle(n2, sig_odd);
  ProductGraph p = cartesian(c1, c2);
  auto vid = [&](int i, int j) { return p.pair_vertex(i, j); };
  auto ei = [&](int a, int b, int c, int d) {
    int idx = p.graph.edge_index(vid(a, b), vid(c, d));
    if (idx < 0)
      throw std::logic_error("color_even_balanced_odd_unbalanced: expected edge missing");
    return idx;
  };

  int r = n1 / 2;
  std::vector<int> h1;
  for (int i = 0; i < r; ++i) {
    int a = 2 * i, b = 2 * i + 1;
    h1.push_back(ei(a, n2 - 1, a, 0));          // second-factor seam, row a
    h1.push_back(ei(b, n2 - 1, a, n2 - 1));     // row rung at the seam column
    h1.push_back(ei(b, 0, b, n2 - 1));          // second-factor seam, row b
    h1.push_back(ei(a, n2 - 2, b, n2 - 2));     // row rung one column earlier
    for (int j = 0; j + 1 <= n2 - 2; ++j) {
      h1.push_back(ei(a, j, a, j + 1));         // arcs along row a
      h1.push_back(ei(b, j, b, j + 1));         // arcs along row b
    }
  }
  auto [d, out] =
      two_layer_coloring(p.graph, h1, /*complement_is_matching=*/false,
                         "color_even_balanced_odd_unbalanced");
  (void)d;
  return out;
}

}  // namespace detail

/// Chromatic-index classification of C_r box C_s from the factor signatures,
/// with a verified coloring in the Delta cases and a checkable certificate in
/// the Delta+1 cases.
inline TheoremOutcome classify_cycle_product(int r, const std::vector<int>& sig1, int s,
                                             const std::vector<int>& sig2) {
  if (r < 3 || s < 3) throw std::invalid_argument("classify_cycle_product: cycles need length 3");
  SignedGraph c1 = make_cycle(r, sig1);
  SignedGraph c2 = make_cycle(s, sig2);
  bool b1 = is_balanced(c1), b2 = is_balanced(c2);
  ProductGraph p = cartesian(c1, c2);

  TheoremOutcome out;
  if (r % 2 == 0 && s % 2 == 0) {
    out.claim = TheoremOutcome::Claim::kDelta;
    out.coloring = decompose_even_even(sig1, sig2).second;
    out.certificate = "even-even-cycle-decomposition";
    return out;
  }
  if (b1 && b2) {
    out.claim = TheoremOutcome::Claim::kDelta;
    out.coloring =
        color_cartesian_combined(c1, color_balanced_cycle(c1), c2, color_balanced_cycle(c2));
    out.certificate = "combined-factor-delta-colorings";
    return out;
  }
  if (r % 2 != s % 2) {
    bool first_even = r % 2 == 0;
    bool even_balanced = first_even ? b1 : b2;
    bool odd_balanced = first_even ? b2 : b1;
    if (even_balanced && !odd_balanced) {
      out.claim = TheoremOutcome::Claim::kDelta;
      if (first_even) {
        out.coloring = detail::color_even_balanced_odd_unbalanced(sig1, sig2);
      } else {
        IncidenceColoring sw = detail::color_even_balanced_odd_unbalanced(sig2, sig1);
        out.coloring = detail::transpose_pair_coloring(cartesian(c2, c1), p, sw);
        require_valid(p.graph, *out.coloring, "classify_cycle_product");
      }
      out.certificate = "balanced-even-unbalanced-odd-decomposition";
      return out;
    }
    // the even factor is unbalanced: the product has an odd negative count
    auto cert = parity_lower_bound(p.graph);
    if (!cert)
      throw std::logic_error("classify_cycle_product: expected odd negative count");
    out.claim = TheoremOutcome::Claim::kDeltaPlusOne;
    out.certificate = *cert;
    return out;
  }
  // both odd, not both balanced
  if (b1 != b2) {
    auto cert = parity_lower_bound(p.graph);
    if (!cert)
      throw std::logic_error("classify_cycle_product: expected odd negative count");
    out.claim = TheoremOutcome::Claim::kDeltaPlusOne;
    out.certificate = *cert;
    return out;
  }
  // both odd and unbalanced: switch everything negative, then a spanning
  // 2-regular layer would need an odd number of negative edges, so no
  // balanced split exists
  VertexSet x = switch_to_all_negative(r, sig1, s, sig2);
  (void)x;
  out.claim = TheoremOutcome::Claim::kDeltaPlusOne;
  out.certificate = "all-negative-switching-odd-split";
  return out;
}

// ---------------------------------------------------------------------------
// Tensor products
// ---------------------------------------------------------------------------

/// Partition of tensor(g1, g2) into m(g2) copies of g1 x P2; part i holds the
/// copy that projects onto edge i of g2, and two copies share vertices iff
/// their edges are adjacent in g2.
inline Decomposition tensor_copy_decomposition(const SignedGraph& g1, const SignedGraph& g2) {
  ProductGraph t = tensor(g1, g2);
  Decomposition d;
  d.parts.resize(g2.m());
  for (int e2 = 0; e2 < g2.m(); ++e2) {
    const Edge& f2 = g2.edge(e2);
    for (const Edge& f1 : g1.edges()) {
      d.parts[e2].push_back(
          t.graph.edge_index(t.pair_vertex(f1.u, f2.u), t.pair_vertex(f1.v, f2.v)));
      d.parts[e2].push_back(
          t.graph.edge_index(t.pair_vertex(f1.u, f2.v), t.pair_vertex(f1.v, f2.u)));
    }
    std::sort(d.parts[e2].begin(), d.parts[e2].end());
  }
  return d;
}

/// Delta(S1)-coloring of tensor(S1, P2). Each magnitude class of the factor
/// coloring induces a subgraph whose product preimage splits into path pairs
/// and balanced cycles, recolored with the same pair; the zero class maps to
/// matchings kept at 0.
inline IncidenceColoring color_tensor_p2(const SignedGraph& s1, const IncidenceColoring& c1,
                                         int sign2) {
  if (sign2 != 1 && sign2 != -1) throw std::invalid_argument("color_tensor_p2: bad edge sign");
  detail::require_delta_coloring(s1, c1, "color_tensor_p2");
  int d1 = max_degree(s1);
  ProductGraph t = tensor(s1, make_path(2, {sign2}));

  IncidenceColoring out;
  out.k = d1;
  out.values.assign(t.graph.m(), {0, 0});

  std::vector<std::vector<int>> classes;  // factor edge indices per magnitude
  for (int e1 = 0; e1 < s1.m(); ++e1) {
    int mag = std::abs(c1.values[e1][0]);
    if (mag >= static_cast<int>(classes.size())) classes.resize(mag + 1);
    classes[mag].push_back(e1);
  }
  for (int mag = 0; mag < static_cast<int>(classes.size()); ++mag) {
    if (classes[mag].empty()) continue;
    std::vector<int> product_edges;
    for (int e1 : classes[mag]) {
      const Edge& f = s1.edge(e1);
      product_edges.push_back(t.graph.edge_index(t.pair_vertex(f.u, 0), t.pair_vertex(f.v, 1)));
      product_edges.push_back(t.graph.edge_index(t.pair_vertex(f.u, 1), t.pair_vertex(f.v, 0)));
    }
    Subgraph sub = edge_subgraph(t.graph, product_edges);
    IncidenceColoring local = color_with_pair(sub.graph, mag);
    overlay_subcoloring(out, sub, local);
  }
  require_valid(t.graph, out, "color_tensor_p2");
  return out;
}

/// Delta(S1)*Delta(T)-coloring of tensor(S1, T) for a signed tree T. The
/// product decomposes into copies of S1 x P2, one per tree edge; a switching
/// aligns all copy signatures, each copy is colored by a bank of the copy
/// palette chosen by a greedy tree edge coloring, and when the copy palette
/// is odd the leftover zero edges form a signed forest recolored with a
/// fresh symmetric set.
inline IncidenceColoring color_tensor_tree(const SignedGraph& s1, const IncidenceColoring& c1,
                                           const SignedGraph& tree) {
  detail::require_delta_coloring(s1, c1, "color_tensor_tree");
  if (!is_forest(tree) || !is_connected(tree) || tree.m() < 1)
    throw std::invalid_argument("color_tensor_tree: second factor must be a tree with an edge");
  if (tree.m() == 1) return color_tensor_p2(s1, c1, tree.edge(0).sign);

  int d1 = max_degree(s1);
  int dt = max_degree(tree);
  int delta = d1 * dt;
  ProductGraph p = tensor(s1, tree);

  // align every copy to the positive-tree signature
  auto hpot = balance_potential(tree);
  VertexSet x(p.graph.n());
  for (int tvert = 0; tvert < tree.n(); ++tvert)
    if ((*hpot)[tvert] < 0)
      for (int u = 0; u < s1.n(); ++u) x.set(p.pair_vertex(u, tvert));
  SignedGraph aligned = switched(p.graph, x);

  ProductGraph ref = tensor(s1, make_path(2, {1}));
  IncidenceColoring copy_coloring = color_tensor_p2(s1, c1, 1);
  int bank_width = d1 / 2;
  std::vector<int> bank = greedy_tree_edge_coloring(tree);

  IncidenceColoring out;
  out.k = delta;
  out.values.assign(p.graph.m(), {0, 0});
  for (int et = 0; et < tree.m(); ++et) {
    const Edge& te = tree.edge(et);
    int offset = (bank[et] - 1) * bank_width;
    for (int e1 = 0; e1 < s1.m(); ++e1) {
      const Edge& f = s1.edge(e1);
      int pairs[2][2][2] = {{{f.u, 0}, {f.v, 1}}, {{f.u, 1}, {f.v, 0}}};
      for (auto& pr : pairs) {
        int re = ref.graph.edge_index(ref.pair_vertex(pr[0][0], pr[0][1]),
                                      ref.pair_vertex(pr[1][0], pr[1][1]));
        int ge = p.graph.edge_index(p.pair_vertex(pr[0][0], pr[0][1] == 0 ? te.u : te.v),
                                    p.pair_vertex(pr[1][0], pr[1][1] == 0 ? te.u : te.v));
        out.values[ge] = {detail::shift_away_from_zero(copy_coloring.values[re][0], offset),
                          detail::shift_away_from_zero(copy_coloring.values[re][1], offset)};
      }
    }
  }

  if (d1 % 2 == 1) {
    std::vector<int> zero_edges;
    for (int ei = 0; ei < p.graph.m(); ++ei)
      if (out.values[ei][0] == 0 && out.values[ei][1] == 0) zero_edges.push_back(ei);
    if (!zero_edges.empty()) {
      Subgraph zg = edge_subgraph(aligned, zero_edges);
      if (!is_forest(zg.graph))
        throw std::logic_error("color_tensor_tree: zero graph is not acyclic");
      IncidenceColoring fc = color_signed_forest(zg.graph);
      if (fc.k % 2 == 1 && delta % 2 == 0)
        fc = remap_zero_to_pair(zg.graph, fc, fc.k / 2 + 1);
      int fresh = bank_width * dt;
      for (auto& pv : fc.values)
        for (int& v : pv) v = detail::shift_away_from_zero(v, fresh);
      overlay_subcoloring(out, zg, fc);
    }
  }

  IncidenceColoring res = negate_at(aligned, out, x);
  res.k = delta;
  require_valid(p.graph, res, "color_tensor_tree");
  return res;
}

// ---------------------------------------------------------------------------
// Strong products
// ---------------------------------------------------------------------------

/// Merge Delta-colorings of the cartesian and tensor layers of a strong
/// product; the even-degree layer is magnitude-shifted past the other. Both
/// layer degrees odd is outside the construction.
inline IncidenceColoring color_strong_combined(const SignedGraph& s1, const SignedGraph& s2,
                                               const IncidenceColoring& c_cart,
                                               const IncidenceColoring& c_tens) {
  ProductGraph cp = cartesian(s1, s2);
  ProductGraph tp = tensor(s1, s2);
  ProductGraph sp = strong(s1, s2);
  detail::require_delta_coloring(cp.graph, c_cart, "color_strong_combined");
  detail::require_delta_coloring(tp.graph, c_tens, "color_strong_combined");
  int dc = max_degree(cp.graph), dtn = max_degree(tp.graph);

  IncidenceColoring keep, moved;
  const ProductGraph* keep_layer;
  const ProductGraph* moved_layer;
  if (dtn % 2 == 0) {
    keep = c_cart;
    moved = shift_colors(c_tens, dc / 2);
    keep_layer = &cp;
    moved_layer = &tp;
  } else if (dc % 2 == 0) {
    keep = c_tens;
    moved = shift_colors(c_cart, dtn / 2);
    keep_layer = &tp;
    moved_layer = &cp;
  } else {
    throw std::invalid_argument("color_strong_combined: both layer degrees are odd");
  }

  IncidenceColoring out;
  out.k = dc + dtn;
  out.values.assign(sp.graph.m(), {0, 0});
  for (int ei = 0; ei < keep_layer->graph.m(); ++ei) {
    const Edge& e = keep_layer->graph.edge(ei);
    out.values[sp.graph.edge_index(e.u, e.v)] = keep.values[ei];
  }
  for (int ei = 0; ei < moved_layer->graph.m(); ++ei) {
    const Edge& e = moved_layer->graph.edge(ei);
    out.values[sp.graph.edge_index(e.u, e.v)] = moved.values[ei];
  }
  require_valid(sp.graph, out, "color_strong_combined");
  return out;
}

/// Delta-coloring of P_r strong P_s (not both trivial), by the size split:
/// a bare path, the K4 case, the 2 x long case, and the general layered
/// combination.
inline IncidenceColoring color_strong_paths(int r, const std::vector<int>& sig1, int s,
                                            const std::vector<int>& sig2) {
  if (r < 1 || s < 1 || (r == 1 && s == 1))
    throw std::invalid_argument("color_strong_paths: need a factor with an edge");
  if (r > s) {
    SignedGraph a = make_path(r, sig1), b = make_path(s, sig2);
    IncidenceColoring sw = color_strong_paths(s, sig2, r, sig1);
    IncidenceColoring out = detail::transpose_pair_coloring(strong(b, a), strong(a, b), sw);
    require_valid(strong(a, b).graph, out, "color_strong_paths");
    return out;
  }
  SignedGraph p1 = make_path(r, sig1);
  SignedGraph p2 = make_path(s, sig2);
  if (r == 1) {
    ProductGraph sp = strong(p1, p2);  // the product is the second path itself
    return color_path(sp.graph);
  }
  if (r == 2 && s == 2) {
    ProductGraph cp = cartesian(p1, p2);
    ProductGraph tp = tensor(p1, p2);
    return color_strong_combined(p1, p2, color_balanced_cycle(cp.graph),
                                 color_matching(tp.graph));
  }
  if (r == 2) {
    IncidenceColoring c_cart =
        color_cartesian_combined(p1, color_matching(p1), p2, color_path(p2));
    ProductGraph tp = tensor(p1, p2);
    IncidenceColoring c_tens = color_signed_forest(tp.graph);  // two disjoint path copies
    return color_strong_combined(p1, p2, c_cart, c_tens);
  }
  IncidenceColoring c_cart = color_cartesian_combined(p1, color_path(p1), p2, color_path(p2));
  IncidenceColoring c_tens = color_tensor_tree(p1, color_path(p1), p2);
  return color_strong_combined(p1, p2, c_cart, c_tens);
}

}  // namespace sigraph
