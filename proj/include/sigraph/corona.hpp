#pragma once

#include <climits>
#include <set>

#include "sigraph/base_colorings.hpp"
#include "sigraph/coloring.hpp"
#include "sigraph/oracle.hpp"
#include "sigraph/products.hpp"

namespace sigraph {

namespace detail {

/// Double the graph until regular: append a twin copy and join every
/// deficient vertex to its twin (new edges positive). Keeps Delta and the
/// original vertex ids, raises the minimum degree by one per round.
inline SignedGraph pad_to_regular(const SignedGraph& g) {
  SignedGraph cur = g;
  int delta = max_degree(g);
  while (!is_regular(cur)) {
    int n = cur.n();
    std::vector<Edge> es = cur.edges();
    for (const Edge& e : cur.edges()) es.push_back({e.u + n, e.v + n, e.sign});
    for (int v = 0; v < n; ++v)
      if (cur.degree(v) < delta) es.push_back({v, v + n, 1});
    cur = SignedGraph(2 * n, std::move(es));
  }
  return cur;
}

/// Consistency check over the assigned prefix of a coloring under
/// construction.
inline void verify_partial(const SignedGraph& g, int k,
                           const std::vector<std::array<int, 2>>& values,
                           const std::vector<char>& assigned, const char* who) {
  for (int ei = 0; ei < g.m(); ++ei) {
    if (!assigned[ei]) continue;
    const Edge& e = g.edge(ei);
    if (!color_in_set(values[ei][0], k) || !color_in_set(values[ei][1], k))
      throw std::logic_error(std::string(who) + ": partial value outside palette");
    if (values[ei][0] != -e.sign * values[ei][1])
      throw std::logic_error(std::string(who) + ": partial edge relation broken");
  }
  for (int v = 0; v < g.n(); ++v) {
    std::set<int> seen;
    for (auto [w, ei] : g.adjacent(v)) {
      (void)w;
      if (!assigned[ei]) continue;
      int val = (g.edge(ei).u == v) ? values[ei][0] : values[ei][1];
      if (!seen.insert(val).second)
        throw std::logic_error(std::string(who) + ": partial color repeated at a vertex");
    }
  }
}

struct PairStructure {
  std::vector<int> singles;    // present values whose negation is absent, |.| ascending
  std::vector<int> pair_mags;  // magnitudes with both signs present, ascending
  bool has_zero = false;
};

inline PairStructure analyze_values(const std::vector<int>& vals) {
  std::set<int> s(vals.begin(), vals.end());
  PairStructure out;
  out.has_zero = s.count(0) > 0;
  for (int v : s) {
    if (v == 0) continue;
    if (v > 0 && s.count(-v)) out.pair_mags.push_back(v);
    if (!s.count(-v)) out.singles.push_back(v);
  }
  std::sort(out.singles.begin(), out.singles.end(),
            [](int a, int b) { return std::abs(a) < std::abs(b); });
  return out;
}

/// One induction step of the corona coloring: recolor the copy-plus-apex
/// coloring cprime so that at the apex it occupies exactly the palette slots
/// the partial coloring has left free, then splice it in.
///
/// Structure facts used throughout (guaranteed by construction): the apex has
/// full degree, so at most one palette color misses it in each coloring;
/// every nonzero magnitude class of cprime therefore touches the apex, and
/// the only possibly apex-free class is the zero class (or its remapped
/// +-half-palette image when the target palette has no zero).
inline void splice_copy_coloring(const SignedGraph& host, int big_k,
                                 std::vector<std::array<int, 2>>& values,
                                 std::vector<char>& assigned, const Subgraph& sub,
                                 const IncidenceColoring& cprime, int host_apex,
                                 int remap_magnitude) {
  const SignedGraph& b = sub.graph;
  int apex = -1;
  for (int lv = 0; lv < static_cast<int>(sub.vertices.size()); ++lv)
    if (sub.vertices[lv] == host_apex) apex = lv;
  if (apex < 0) throw std::logic_error("splice_copy_coloring: apex not in subgraph");

  // colors already fixed around the apex, and the free slots to fill
  std::vector<int> used;
  for (auto [w, ei] : host.adjacent(host_apex)) {
    (void)w;
    if (assigned[ei]) used.push_back(host.edge(ei).u == host_apex ? values[ei][0] : values[ei][1]);
  }
  std::set<int> used_set(used.begin(), used.end());
  std::vector<int> free_vals;
  for (int v : color_set(big_k).members)
    if (!used_set.count(v)) free_vals.push_back(v);
  if (free_vals.size() != static_cast<std::size_t>(b.degree(apex)))
    throw std::logic_error("splice_copy_coloring: free slot count mismatch at the apex");

  std::vector<int> at_apex;
  for (auto [w, ei] : b.adjacent(apex)) {
    (void)w;
    at_apex.push_back(b.edge(ei).u == apex ? cprime.values[ei][0] : cprime.values[ei][1]);
  }
  PairStructure us = analyze_values(used);
  PairStructure ws = analyze_values(at_apex);
  bool zero_in_big = big_k % 2 == 1;
  if (static_cast<int>(us.singles.size()) > (zero_in_big ? 1 : 2) ||
      static_cast<int>(ws.singles.size()) > (zero_in_big ? 1 : 2))
    throw std::logic_error("splice_copy_coloring: unpaired color bound violated");

  std::vector<int> free_pair_mags;
  {
    std::set<int> fs(free_vals.begin(), free_vals.end());
    for (int v : free_vals)
      if (v > 0 && fs.count(-v)) free_pair_mags.push_back(v);
    std::sort(free_pair_mags.begin(), free_pair_mags.end());
  }

  // magnitude classes of cprime over the whole copy graph
  std::vector<std::vector<int>> class_edges;
  for (int le = 0; le < b.m(); ++le) {
    int mag = std::abs(cprime.values[le][0]);
    if (mag >= static_cast<int>(class_edges.size())) class_edges.resize(mag + 1);
    class_edges[mag].push_back(le);
  }
  auto class_of = [&](int mag) -> const std::vector<int>& {
    static const std::vector<int> empty;
    if (mag < 0 || mag >= static_cast<int>(class_edges.size())) return empty;
    return class_edges[mag];
  };

  constexpr int kUnset = INT_MIN;
  std::vector<std::array<int, 2>> nv(b.m(), {kUnset, kUnset});
  std::vector<char> done_class(class_edges.size(), 0);
  std::vector<char> skip_edge(b.m(), 0);

  auto apply_odd_map = [&](int mag, int target_for_positive) {
    for (int le : class_of(mag)) {
      if (skip_edge[le]) continue;
      for (int side = 0; side < 2; ++side) {
        int x = cprime.values[le][side];
        nv[le][side] = x > 0 ? target_for_positive : -target_for_positive;
      }
    }
    done_class[mag] = 1;
  };
  auto find_apex_edge = [&](int value) {
    for (auto [w, ei] : b.adjacent(apex)) {
      (void)w;
      int val = b.edge(ei).u == apex ? cprime.values[ei][0] : cprime.values[ei][1];
      if (val == value) return ei;
    }
    throw std::logic_error("splice_copy_coloring: expected apex value missing");
  };
  auto set_apex_edge = [&](int le, int apex_value) {
    const Edge& e = b.edge(le);
    int other = -e.sign * apex_value;
    nv[le] = (e.u == apex) ? std::array<int, 2>{apex_value, other}
                           : std::array<int, 2>{other, apex_value};
    skip_edge[le] = 1;
    return e.u == apex ? e.v : e.u;  // copy-side endpoint
  };
  // matching class to the pair +-mag, flipping orientation where the fixed
  // value at one protected vertex would collide
  auto assign_matching = [&](const std::vector<int>& edges_local, int mag, int protect_vertex,
                             int protect_value) {
    for (int le : edges_local) {
      if (skip_edge[le]) continue;
      const Edge& e = b.edge(le);
      int xu = mag, xv = -e.sign * mag;
      if ((e.u == protect_vertex && xu == protect_value) ||
          (e.v == protect_vertex && xv == protect_value)) {
        xu = -xu;
        xv = -xv;
      }
      nv[le] = {xu, xv};
    }
  };

  std::size_t zip = std::min(us.singles.size(), ws.singles.size());
  for (std::size_t i = 0; i < zip; ++i) {
    int l = us.singles[i], lp = ws.singles[i];
    apply_odd_map(std::abs(lp), lp > 0 ? -l : l);  // maps the lp incidence to -l
  }
  std::size_t fp_next = 0;
  auto next_free_pair = [&]() {
    if (fp_next >= free_pair_mags.size())
      throw std::logic_error("splice_copy_coloring: ran out of free pairs");
    return free_pair_mags[fp_next++];
  };
  int smallest_used_pair = us.pair_mags.empty() ? 0 : us.pair_mags.front();

  if (ws.singles.size() == zip + 1) {
    // apex is one unpaired color ahead: route its edge through 0
    if (!zero_in_big || used_set.count(0))
      throw std::logic_error("splice_copy_coloring: zero slot unavailable for the split");
    int lp = ws.singles[zip];
    int le = find_apex_edge(lp);
    set_apex_edge(le, 0);
    if (smallest_used_pair == 0)
      throw std::logic_error("splice_copy_coloring: no reusable pair for the split remainder");
    apply_odd_map(std::abs(lp), lp > 0 ? smallest_used_pair : -smallest_used_pair);
  } else if (ws.singles.size() == zip + 2) {
    // two unpaired copy colors against a fully paired apex: the larger
    // magnitude is the remapped matching class; bundle it with the other
    // class's apex edge into an acyclic graph and give it the last free pair
    int lp1 = ws.singles[zip], lp2 = ws.singles[zip + 1];
    if (std::abs(lp2) != remap_magnitude)
      throw std::logic_error("splice_copy_coloring: expected the remapped class to be unpaired");
    int le1 = find_apex_edge(lp1);
    skip_edge[le1] = 1;
    if (smallest_used_pair == 0)
      throw std::logic_error("splice_copy_coloring: no reusable pair for the acyclic move");
    apply_odd_map(std::abs(lp1), lp1 > 0 ? smallest_used_pair : -smallest_used_pair);
    std::vector<int> acyclic = class_of(std::abs(lp2));
    acyclic.push_back(le1);
    std::sort(acyclic.begin(), acyclic.end());
    int q = next_free_pair();
    Subgraph ag = edge_subgraph(b, acyclic);
    IncidenceColoring ac = color_with_pair(ag.graph, q);
    for (int ae = 0; ae < ag.graph.m(); ++ae) {
      nv[ag.edges[ae]] = ac.values[ae];
      skip_edge[ag.edges[ae]] = 1;
    }
    done_class[std::abs(lp2)] = 1;
  }

  if (us.singles.size() > zip) {
    // apex already carries unpaired colors with nothing to pair against:
    // run one copy pair through the leftover half-slots
    std::vector<int> leftovers(us.singles.begin() + zip, us.singles.end());
    if (ws.pair_mags.empty())
      throw std::logic_error("splice_copy_coloring: no copy pair to route through half-slots");
    int kp = ws.pair_mags.front();
    if (leftovers.size() == 1) {
      // 0 plus the negated leftover absorb the chosen pair
      if (!zero_in_big || used_set.count(0))
        throw std::logic_error("splice_copy_coloring: zero slot unavailable");
      int l = leftovers[0];
      set_apex_edge(find_apex_edge(kp), 0);
      int wb = set_apex_edge(find_apex_edge(-kp), -l);
      if (smallest_used_pair == 0)
        throw std::logic_error("splice_copy_coloring: no reusable pair for the routed class");
      apply_odd_map(kp, smallest_used_pair);
      if (class_edges.size() > 0 && !class_of(0).empty()) {
        // leftover zero matching inside the copy moves to the +-l pair,
        // dodging the routed value at its copy endpoint
        assign_matching(class_of(0), std::abs(l), wb, -b.edge(find_apex_edge(-kp)).sign * -l);
        done_class[0] = 1;
      }
    } else {
      int l1 = leftovers[0], l2 = leftovers[1];
      set_apex_edge(find_apex_edge(kp), -l1);
      set_apex_edge(find_apex_edge(-kp), -l2);
      if (smallest_used_pair != 0) {
        apply_odd_map(kp, smallest_used_pair);
      } else {
        // degree-2 base graph: reuse the l2 magnitude; the sign choice keeps
        // the routed copy endpoint distinct from its class neighbor
        apply_odd_map(kp, l2);
      }
      if (remap_magnitude > 0 && !done_class[remap_magnitude] &&
          std::find(ws.pair_mags.begin(), ws.pair_mags.end(), remap_magnitude) ==
              ws.pair_mags.end() &&
          !class_of(remap_magnitude).empty()) {
        // copy-internal remapped matching: reuse the l1 magnitude per edge
        int wa = -1;
        for (auto [w, ei] : b.adjacent(apex)) {
          (void)w;
          if (skip_edge[ei] && nv[ei][b.edge(ei).u == apex ? 0 : 1] == -l1)
            wa = b.edge(ei).u == apex ? b.edge(ei).v : b.edge(ei).u;
        }
        int forbidden = wa >= 0 ? -b.edge(find_apex_edge(kp)).sign * -l1 : kUnset;
        assign_matching(class_of(remap_magnitude), std::abs(l1), wa, forbidden);
        done_class[remap_magnitude] = 1;
      }
    }
  }

  // remaining apex pairs onto free pairs, ascending
  for (int mag : ws.pair_mags) {
    if (done_class[mag]) continue;
    bool fully_skipped = true;
    for (int le : class_of(mag)) fully_skipped = fully_skipped && skip_edge[le];
    if (fully_skipped && !class_of(mag).empty()) continue;
    // the routed class was marked done above; everything else is plain
    apply_odd_map(mag, next_free_pair());
  }
  // zero class copies through when the big palette still has a zero slot
  if (!class_of(0).empty() && !done_class[0]) {
    if (!zero_in_big) throw std::logic_error("splice_copy_coloring: stray zero class");
    for (int le : class_of(0))
      if (!skip_edge[le]) nv[le] = {0, 0};
    done_class[0] = 1;
  }
  // copy-internal remapped matching with no special handling yet: park it on
  // a reused apex pair (fresh inside the copy)
  if (remap_magnitude > 0 && remap_magnitude < static_cast<int>(class_edges.size()) &&
      !done_class[remap_magnitude] && !class_of(remap_magnitude).empty()) {
    bool at_apex_class = false;
    for (int v : at_apex) at_apex_class = at_apex_class || std::abs(v) == remap_magnitude;
    if (!at_apex_class) {
      if (smallest_used_pair == 0)
        throw std::logic_error("splice_copy_coloring: no reusable pair for the internal matching");
      apply_odd_map(remap_magnitude, smallest_used_pair);
    }
  }

  for (int le = 0; le < b.m(); ++le)
    if (nv[le][0] == kUnset || nv[le][1] == kUnset)
      throw std::logic_error("splice_copy_coloring: unmapped copy edge");

  // the apex must now see exactly the free slots
  {
    std::vector<int> got;
    for (auto [w, ei] : b.adjacent(apex)) {
      (void)w;
      got.push_back(b.edge(ei).u == apex ? nv[ei][0] : nv[ei][1]);
    }
    std::sort(got.begin(), got.end());
    std::vector<int> want = free_vals;
    std::sort(want.begin(), want.end());
    if (got != want)
      throw std::logic_error("splice_copy_coloring: apex slots not exactly filled");
  }

  for (int le = 0; le < b.m(); ++le) {
    values[sub.edges[le]] = nv[le];
    assigned[sub.edges[le]] = 1;
  }
}

/// Corona coloring for a regular base graph: color the base with one spare
/// color, then absorb one copy-plus-apex graph at a time.
inline IncidenceColoring color_corona_regular(const SignedGraph& g1, const SignedGraph& g2,
                                              const std::vector<int>& link_signs,
                                              int oracle_edge_guard) {
  int d1 = max_degree(g1);
  int n2 = g2.n();
  int big_k = d1 + n2;
  ProductGraph cor = corona(g1, g2, link_signs);
  const SignedGraph& G = cor.graph;

  if (g1.m() > oracle_edge_guard)
    throw std::invalid_argument("color_corona: base graph exceeds the search guard");

  std::vector<std::array<int, 2>> values(G.m(), {0, 0});
  std::vector<char> assigned(G.m(), 0);

  // base coloring with Delta(G1)+1 colors, zero remapped out when the big
  // palette has no zero slot
  auto base = decide_k_colorable(g1, d1 + 1);
  if (!base) throw std::logic_error("color_corona: base coloring must exist");
  IncidenceColoring c0 = *base;
  bool remap_needed = (d1 + 1) % 2 == 1 && big_k % 2 == 0;
  if (remap_needed) c0 = remap_zero_to_pair(g1, c0, big_k / 2);
  for (int e1 = 0; e1 < g1.m(); ++e1) {
    const Edge& e = g1.edge(e1);
    int ge = G.edge_index(e.u, e.v);
    values[ge] = c0.values[e1];
    assigned[ge] = 1;
  }
  verify_partial(G, big_k, values, assigned, "color_corona");

  for (int i = 0; i < g1.n(); ++i) {
    // copy-plus-apex subgraph for attachment vertex i
    std::vector<int> bi_edges;
    for (int e2 = 0; e2 < g2.m(); ++e2) {
      const Edge& e = g2.edge(e2);
      bi_edges.push_back(
          G.edge_index(cor.corona_copy_vertex(i, e.u), cor.corona_copy_vertex(i, e.v)));
    }
    for (int j = 0; j < n2; ++j)
      bi_edges.push_back(G.edge_index(cor.corona_attachment(i), cor.corona_copy_vertex(i, j)));
    std::sort(bi_edges.begin(), bi_edges.end());
    Subgraph sub = edge_subgraph(G, bi_edges);
    if (sub.graph.m() > oracle_edge_guard)
      throw std::invalid_argument("color_corona: copy graph exceeds the search guard");

    auto cstar = decide_k_colorable(sub.graph, n2 + 1);
    if (!cstar) throw std::logic_error("color_corona: copy coloring must exist");
    IncidenceColoring cprime = *cstar;
    bool copy_remap = (n2 + 1) % 2 == 1 && big_k % 2 == 0;
    if (copy_remap) cprime = remap_zero_to_pair(sub.graph, cprime, big_k / 2);

    splice_copy_coloring(G, big_k, values, assigned, sub, cprime, cor.corona_attachment(i),
                         copy_remap ? big_k / 2 : 0);
    verify_partial(G, big_k, values, assigned, "color_corona");
  }

  IncidenceColoring out;
  out.k = big_k;
  out.values = std::move(values);
  require_valid(G, out, "color_corona");
  return out;
}

}  // namespace detail

/// Delta-coloring of the corona product of g1 (with Delta >= 2) and g2, for
/// any signature. The base graph is padded to a regular supergraph first so
/// every attachment vertex has full degree, and the padded coloring is
/// restricted back to the requested corona at the end.
inline IncidenceColoring color_corona(const SignedGraph& g1, const SignedGraph& g2,
                                      const std::vector<int>& link_signs,
                                      int oracle_edge_guard = 24) {
  if (max_degree(g1) < 2)
    throw std::invalid_argument("color_corona: base graph needs maximum degree at least 2");
  if (g2.n() < 1) throw std::invalid_argument("color_corona: copies must be nonempty");
  if (static_cast<int>(link_signs.size()) != g1.n() * g2.n())
    throw std::invalid_argument("color_corona: expected n1*n2 link signs");

  SignedGraph padded = detail::pad_to_regular(g1);
  std::vector<int> padded_links = link_signs;
  padded_links.resize(padded.n() * g2.n(), 1);
  IncidenceColoring big =
      detail::color_corona_regular(padded, g2, padded_links, oracle_edge_guard);

  if (padded.n() == g1.n()) return big;

  ProductGraph cor = corona(g1, g2, link_signs);
  ProductGraph big_cor = corona(padded, g2, padded_links);
  IncidenceColoring out;
  out.k = big.k;
  out.values.assign(cor.graph.m(), {0, 0});
  auto lift = [&](int v) {
    return v < g1.n() ? v : padded.n() + (v - g1.n());  // copies shift past the padding
  };
  for (int ei = 0; ei < cor.graph.m(); ++ei) {
    const Edge& e = cor.graph.edge(ei);
    int be = big_cor.graph.edge_index(lift(e.u), lift(e.v));
    if (be < 0) throw std::logic_error("color_corona: restriction edge missing");
    out.values[ei] = big.values[be];
  }
  require_valid(cor.graph, out, "color_corona");
  return out;
}

}  // namespace sigraph
