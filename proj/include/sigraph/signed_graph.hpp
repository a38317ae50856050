#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace sigraph {

/// An undirected signed edge. Endpoints are stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A (vertex, edge) pair; the vertex must be an endpoint of the edge.
struct Incidence {
  int vertex = 0;
  int edge = 0;  // index into the host graph's edge list

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Subset of a graph's vertices with bitset semantics.
struct VertexSet {
  std::vector<char> member;

  VertexSet() = default;
  explicit VertexSet(int n) : member(n, 0) {}
  VertexSet(int n, std::initializer_list<int> vs) : member(n, 0) {
    for (int v : vs) set(v);
  }

  int size() const { return static_cast<int>(member.size()); }
  bool contains(int v) const { return v >= 0 && v < size() && member[v] != 0; }
  void set(int v) {
    if (v < 0 || v >= size()) throw std::out_of_range("VertexSet: vertex out of range");
    member[v] = 1;
  }
  void toggle(int v) {
    if (v < 0 || v >= size()) throw std::out_of_range("VertexSet: vertex out of range");
    member[v] ^= 1;
  }
  int count() const {
    int c = 0;
    for (char b : member) c += b;
    return c;
  }
};

/// Edge partition of a host graph; parts hold edge indices.
struct Decomposition {
  std::vector<std::vector<int>> parts;
};

/// Simple undirected graph with a +-1 sign per edge. Vertices are dense
/// integers 0..n-1 and the edge list is kept sorted lexicographically, so
/// equal graphs have identical representations.
class SignedGraph {
 public:
  SignedGraph() = default;

  SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("SignedGraph: negative vertex count");
    for (Edge& e : edges_) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u == e.v) throw std::invalid_argument("SignedGraph: self-loop");
      if (e.u < 0 || e.v >= n_) throw std::invalid_argument("SignedGraph: endpoint out of range");
      if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("SignedGraph: sign must be +1 or -1");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
        throw std::invalid_argument("SignedGraph: duplicate edge");
    }
    adj_.assign(n_, {});
    for (int i = 0; i < m(); ++i) {
      adj_[edges_[i].u].push_back({edges_[i].v, i});
      adj_[edges_[i].v].push_back({edges_[i].u, i});
    }
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(i); }

  /// (neighbor, edge index) pairs for v.
  const std::vector<std::pair<int, int>>& adjacent(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  /// Index of edge {u,v}, or -1 if absent.
  int edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge probe{u, v, 1};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                               [](const Edge& a, const Edge& b) {
                                 return std::tie(a.u, a.v) < std::tie(b.u, b.v);
                               });
    if (it == edges_.end() || it->u != u || it->v != v) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  int other_end(int edge_idx, int v) const {
    const Edge& e = edge(edge_idx);
    if (e.u == v) return e.v;
    if (e.v == v) return e.u;
    throw std::invalid_argument("other_end: vertex not an endpoint");
  }

  bool is_endpoint(int edge_idx, int v) const {
    const Edge& e = edge(edge_idx);
    return e.u == v || e.v == v;
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

inline std::uint64_t hash(const SignedGraph& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(g.n()));
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
    mix(static_cast<std::uint64_t>(e.sign + 2));
  }
  return h;
}

/// Deterministic RNG used for seeded sign/graph generation (splitmix64).
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  int sign() { return (next() & 1) ? 1 : -1; }
};

// ---------------------------------------------------------------------------
// Family generators
// ---------------------------------------------------------------------------

/// Path 0-1-...-(r-1); signs[i] belongs to edge (i, i+1).
inline SignedGraph make_path(int r, const std::vector<int>& signs) {
  if (r < 1) throw std::invalid_argument("make_path: need at least one vertex");
  if (static_cast<int>(signs.size()) != r - 1)
    throw std::invalid_argument("make_path: expected r-1 signs");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < r; ++i) es.push_back({i, i + 1, signs[i]});
  return SignedGraph(r, std::move(es));
}

/// Cycle 0-1-...-(r-1)-0; signs follow the walk, signs[r-1] is the seam (r-1, 0).
inline SignedGraph make_cycle(int r, const std::vector<int>& signs) {
  if (r < 3) throw std::invalid_argument("make_cycle: need at least three vertices");
  if (static_cast<int>(signs.size()) != r)
    throw std::invalid_argument("make_cycle: expected r signs");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < r; ++i) es.push_back({i, i + 1, signs[i]});
  es.push_back({r - 1, 0, signs[r - 1]});
  return SignedGraph(r, std::move(es));
}

/// K_n with signs in canonical pair order (0,1),(0,2),...,(n-2,n-1).
inline SignedGraph make_complete(int n, const std::vector<int>& signs) {
  if (n < 0) throw std::invalid_argument("make_complete: negative size");
  if (static_cast<int>(signs.size()) != n * (n - 1) / 2)
    throw std::invalid_argument("make_complete: expected n(n-1)/2 signs");
  std::vector<Edge> es;
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v, signs[idx++]});
  return SignedGraph(n, std::move(es));
}

/// Seeded random tree on n vertices (all-positive signs), via a Pruefer-style
/// attachment so the result only depends on (n, seed).
inline SignedGraph make_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("make_random_tree: need at least one vertex");
  SplitMix64 rng(seed);
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
    es.push_back({parent, v, 1});
  }
  return SignedGraph(n, std::move(es));
}

/// Replace all edge signs, in canonical edge order.
inline SignedGraph with_signs(const SignedGraph& g, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != g.m())
    throw std::invalid_argument("with_signs: expected one sign per edge");
  std::vector<Edge> es = g.edges();
  for (int i = 0; i < g.m(); ++i) es[i].sign = signs[i];
  return SignedGraph(g.n(), std::move(es));
}

// ---------------------------------------------------------------------------
// Switching, balance, degrees
// ---------------------------------------------------------------------------

/// Flip the sign of every edge with exactly one endpoint in X.
inline SignedGraph switched(const SignedGraph& g, const VertexSet& x) {
  if (x.size() != g.n()) throw std::invalid_argument("switched: vertex set size mismatch");
  std::vector<Edge> es = g.edges();
  for (Edge& e : es) {
    if (x.contains(e.u) != x.contains(e.v)) e.sign = -e.sign;
  }
  return SignedGraph(g.n(), std::move(es));
}

/// Connected components as vertex lists (singletons included).
inline std::vector<std::vector<int>> components(const SignedGraph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (auto [w, ei] : g.adjacent(v)) {
        (void)ei;
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

/// Potential h with sign(uv) = h(u) h(v), if one exists (component-wise BFS).
/// The graph is balanced iff such a labeling exists.
inline std::optional<std::vector<int>> balance_potential(const SignedGraph& g) {
  std::vector<int> h(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (h[s] != 0) continue;
    h[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, ei] : g.adjacent(v)) {
        int want = g.edge(ei).sign * h[v];
        if (h[w] == 0) {
          h[w] = want;
          stack.push_back(w);
        } else if (h[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return h;
}

inline bool is_balanced(const SignedGraph& g) { return balance_potential(g).has_value(); }

/// Switching set that makes a balanced graph all-positive.
inline VertexSet switching_to_all_positive(const SignedGraph& g) {
  auto h = balance_potential(g);
  if (!h) throw std::invalid_argument("switching_to_all_positive: graph is unbalanced");
  VertexSet x(g.n());
  for (int v = 0; v < g.n(); ++v)
    if ((*h)[v] < 0) x.set(v);
  return x;
}

/// Sign product along a closed walk given as a vertex sequence without
/// repeats; the closing edge back to the first vertex is implied.
inline int cycle_sign(const SignedGraph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("cycle_sign: need at least three vertices");
  std::vector<char> seen(g.n(), 0);
  for (int v : cycle) {
    if (!g.has_vertex(v)) throw std::invalid_argument("cycle_sign: vertex out of range");
    if (seen[v]) throw std::invalid_argument("cycle_sign: repeated vertex");
    seen[v] = 1;
  }
  int prod = 1;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i];
    int v = cycle[(i + 1) % cycle.size()];
    int ei = g.edge_index(u, v);
    if (ei < 0) throw std::invalid_argument("cycle_sign: missing edge along walk");
    prod *= g.edge(ei).sign;
  }
  return prod;
}

inline int max_degree(const SignedGraph& g) {
  int d = 0;
  for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline int negative_edge_count(const SignedGraph& g) {
  int c = 0;
  for (const Edge& e : g.edges()) c += (e.sign < 0);
  return c;
}

/// True iff every vertex has the same degree d.
inline bool is_regular(const SignedGraph& g, int* degree_out = nullptr) {
  if (g.n() == 0) return true;
  int d = g.degree(0);
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

/// Parts must be pairwise disjoint and cover every edge index exactly once.
inline bool validate_decomposition(const SignedGraph& g, const Decomposition& d) {
  std::vector<char> seen(g.m(), 0);
  int covered = 0;
  for (const auto& part : d.parts) {
    for (int ei : part) {
      if (ei < 0 || ei >= g.m()) return false;
      if (seen[ei]) return false;
      seen[ei] = 1;
      ++covered;
    }
  }
  return covered == g.m();
}

// ---------------------------------------------------------------------------
// Shape predicates and walks
// ---------------------------------------------------------------------------

inline bool is_connected(const SignedGraph& g) {
  return g.n() <= 1 || components(g).size() == 1;
}

/// Acyclic check: m = n - (number of components).
inline bool is_forest(const SignedGraph& g) {
  return g.m() == g.n() - static_cast<int>(components(g).size());
}

inline bool is_path_graph(const SignedGraph& g) {
  if (g.n() < 1 || g.m() != g.n() - 1 || !is_connected(g)) return false;
  return max_degree(g) <= 2;
}

inline bool is_cycle_graph(const SignedGraph& g) {
  if (g.n() < 3 || g.m() != g.n() || !is_connected(g)) return false;
  int d = 0;
  return is_regular(g, &d) && d == 2;
}

/// Vertex order along a path graph, starting at the lower-numbered endpoint.
inline std::vector<int> path_order(const SignedGraph& g) {
  if (!is_path_graph(g)) throw std::invalid_argument("path_order: not a path");
  if (g.n() == 1) return {0};
  int start = -1;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 1) {
      start = v;
      break;
    }
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < g.n()) {
    for (auto [w, ei] : g.adjacent(cur)) {
      (void)ei;
      if (w != prev) {
        order.push_back(w);
        prev = cur;
        cur = w;
        break;
      }
    }
  }
  return order;
}

/// Vertex order around a cycle graph, starting at vertex with lowest id and
/// moving toward its lower-numbered neighbor.
inline std::vector<int> cycle_order(const SignedGraph& g) {
  if (!is_cycle_graph(g)) throw std::invalid_argument("cycle_order: not a cycle");
  std::vector<int> order{0};
  int prev = -1, cur = 0;
  while (static_cast<int>(order.size()) < g.n()) {
    int next = -1;
    for (auto [w, ei] : g.adjacent(cur)) {
      (void)ei;
      if (w != prev && (next == -1 || w < next)) next = w;
    }
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

// ---------------------------------------------------------------------------
// Edge-induced subgraphs
// ---------------------------------------------------------------------------

/// Edge-induced subgraph with compact local vertex ids. Local ids preserve
/// host vertex order, so canonical edge order is preserved as well.
struct Subgraph {
  SignedGraph graph;
  std::vector<int> vertices;  // local vertex -> host vertex
  std::vector<int> edges;     // local edge -> host edge index
};

inline Subgraph edge_subgraph(const SignedGraph& host, const std::vector<int>& edge_idxs) {
  std::vector<int> verts;
  for (int ei : edge_idxs) {
    const Edge& e = host.edge(ei);
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> local(host.n(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;

  std::vector<Edge> es;
  for (int ei : edge_idxs) {
    const Edge& e = host.edge(ei);
    es.push_back({local[e.u], local[e.v], e.sign});
  }
  Subgraph out;
  out.graph = SignedGraph(static_cast<int>(verts.size()), std::move(es));
  out.vertices = std::move(verts);
  out.edges.resize(out.graph.m());
  for (int le = 0; le < out.graph.m(); ++le) {
    const Edge& e = out.graph.edge(le);
    int hi = host.edge_index(out.vertices[e.u], out.vertices[e.v]);
    out.edges[le] = hi;
  }
  return out;
}

/// Edge index groups of the connected components (isolated vertices ignored).
inline std::vector<std::vector<int>> edge_components(const SignedGraph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1 || g.degree(s) == 0) continue;
    std::vector<int> stack{s};
    comp[s] = 0;
    std::vector<int> edges_here;
    std::vector<char> edge_seen(g.m(), 0);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, ei] : g.adjacent(v)) {
        if (!edge_seen[ei]) {
          edge_seen[ei] = 1;
          edges_here.push_back(ei);
        }
        if (comp[w] == -1) {
          comp[w] = 0;
          stack.push_back(w);
        }
      }
    }
    std::sort(edges_here.begin(), edges_here.end());
    out.push_back(std::move(edges_here));
  }
  return out;
}

}  // namespace sigraph
