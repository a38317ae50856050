#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>

#include "sigraph/coloring.hpp"
#include "sigraph/signed_graph.hpp"

namespace sigraph {

namespace detail {

/// Backtracking search over per-edge values. Each edge gets a value a from
/// M_k at its smaller endpoint; the other endpoint is forced to -sign * a.
/// Edges are processed highest-endpoint-degree first (ties broken
/// lexicographically) and values in palette order, so the witness found is
/// deterministic. The search is exhaustive: a failure proves infeasibility.
class KColorSearch {
 public:
  KColorSearch(const SignedGraph& g, int k) : g_(g), palette_(color_set(k).members), k_(k) {
    color_index_.assign(2 * (k / 2) + 1, -1);
    for (int i = 0; i < static_cast<int>(palette_.size()); ++i)
      color_index_[slot(palette_[i])] = i;
    order_.resize(g.m());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      int da = std::max(g.degree(g.edge(a).u), g.degree(g.edge(a).v));
      int db = std::max(g.degree(g.edge(b).u), g.degree(g.edge(b).v));
      if (da != db) return da > db;
      return a < b;  // edge list is sorted lexicographically
    });
    used_.assign(g.n(), 0);
    remaining_.resize(g.n());
    for (int v = 0; v < g.n(); ++v) remaining_[v] = g.degree(v);
    values_.assign(g.m(), {0, 0});
  }

  std::optional<IncidenceColoring> run() {
    if (max_degree(g_) > k_) return std::nullopt;  // pigeonhole at a max-degree vertex
    if (!recurse(0)) return std::nullopt;
    IncidenceColoring c;
    c.k = k_;
    c.values = values_;
    return c;
  }

 private:
  int slot(int color) const { return color + k_ / 2; }

  bool feasible_at(int v) const {
    int free = static_cast<int>(palette_.size()) - std::popcount(used_[v]);
    return free >= remaining_[v];
  }

  bool recurse(int pos) {
    if (pos == g_.m()) return true;
    int ei = order_[pos];
    const Edge& e = g_.edge(ei);
    --remaining_[e.u];
    --remaining_[e.v];
    for (int a : palette_) {
      int b = -e.sign * a;
      std::uint64_t bit_a = 1ull << color_index_[slot(a)];
      std::uint64_t bit_b = 1ull << color_index_[slot(b)];
      if ((used_[e.u] & bit_a) || (used_[e.v] & bit_b)) continue;
      used_[e.u] |= bit_a;
      used_[e.v] |= bit_b;
      values_[ei] = {a, b};
      if (feasible_at(e.u) && feasible_at(e.v) && recurse(pos + 1)) return true;
      used_[e.u] &= ~bit_a;
      used_[e.v] &= ~bit_b;
    }
    ++remaining_[e.u];
    ++remaining_[e.v];
    return false;
  }

  const SignedGraph& g_;
  std::vector<int> palette_;
  int k_;
  std::vector<int> color_index_;
  std::vector<int> order_;
  std::vector<std::uint64_t> used_;
  std::vector<int> remaining_;
  std::vector<std::array<int, 2>> values_;
};

}  // namespace detail

/// Exhaustive decision procedure: returns a valid k-edge-coloring if one
/// exists, nullopt otherwise (a proof of infeasibility).
inline std::optional<IncidenceColoring> decide_k_colorable(const SignedGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("decide_k_colorable: k must be positive");
  if (k > 63) throw std::invalid_argument("decide_k_colorable: k too large for mask search");
  detail::KColorSearch search(g, k);
  return search.run();
}

/// Exact chromatic index with witness. Always Delta or Delta+1; the Delta+1
/// attempt failing would contradict the generalized Vizing bound, so it is
/// treated as an internal error.
inline std::pair<int, IncidenceColoring> exact_chromatic_index(const SignedGraph& g) {
  int delta = max_degree(g);
  if (delta == 0) throw std::invalid_argument("exact_chromatic_index: graph has no edges");
  if (auto c = decide_k_colorable(g, delta)) return {delta, *c};
  auto c = decide_k_colorable(g, delta + 1);
  if (!c) throw std::logic_error("exact_chromatic_index: Delta+1 coloring must exist");
  return {delta + 1, *c};
}

}  // namespace sigraph
