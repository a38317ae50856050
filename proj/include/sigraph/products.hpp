#pragma once

#include <string>

#include "sigraph/signed_graph.hpp"

namespace sigraph {

enum class ProductKind { kCartesian, kTensor, kStrong, kCorona };

inline const char* to_string(ProductKind k) {
  switch (k) {
    case ProductKind::kCartesian: return "cartesian";
    case ProductKind::kTensor: return "tensor";
    case ProductKind::kStrong: return "strong";
    case ProductKind::kCorona: return "corona";
  }
  return "?";
}

/// A product graph plus the index maps needed to project back to the factors.
/// For the pair products, vertex (i, j) of factor ids is stored as i*n2 + j.
/// For the corona, factor-1 vertices come first (these are the attachment
/// vertices) and copy i of factor 2 occupies n1 + i*n2 .. n1 + (i+1)*n2 - 1.
struct ProductGraph {
  SignedGraph graph;
  int n1 = 0;
  int n2 = 0;
  ProductKind kind = ProductKind::kCartesian;
  Decomposition parts;  // strong only: parts[0] = cartesian edges, parts[1] = tensor edges

  int pair_vertex(int i, int j) const {
    if (kind == ProductKind::kCorona) throw std::invalid_argument("pair_vertex: corona layout");
    if (i < 0 || i >= n1 || j < 0 || j >= n2)
      throw std::out_of_range("pair_vertex: factor vertex out of range");
    return i * n2 + j;
  }
  int first_coordinate(int v) const { return v / n2; }
  int second_coordinate(int v) const { return v % n2; }

  int corona_attachment(int i) const { return i; }
  int corona_copy_vertex(int i, int j) const { return n1 + i * n2 + j; }
};

inline ProductGraph cartesian(const SignedGraph& s1, const SignedGraph& s2) {
  ProductGraph p;
  p.n1 = s1.n();
  p.n2 = s2.n();
  p.kind = ProductKind::kCartesian;
  std::vector<Edge> es;
  for (int i = 0; i < s1.n(); ++i)
    for (const Edge& e2 : s2.edges())
      es.push_back({i * s2.n() + e2.u, i * s2.n() + e2.v, e2.sign});
  for (const Edge& e1 : s1.edges())
    for (int j = 0; j < s2.n(); ++j)
      es.push_back({e1.u * s2.n() + j, e1.v * s2.n() + j, e1.sign});
  p.graph = SignedGraph(s1.n() * s2.n(), std::move(es));
  return p;
}

inline ProductGraph tensor(const SignedGraph& s1, const SignedGraph& s2) {
  ProductGraph p;
  p.n1 = s1.n();
  p.n2 = s2.n();
  p.kind = ProductKind::kTensor;
  std::vector<Edge> es;
  for (const Edge& e1 : s1.edges())
    for (const Edge& e2 : s2.edges()) {
      es.push_back({e1.u * s2.n() + e2.u, e1.v * s2.n() + e2.v, e1.sign * e2.sign});
      es.push_back({e1.u * s2.n() + e2.v, e1.v * s2.n() + e2.u, e1.sign * e2.sign});
    }
  p.graph = SignedGraph(s1.n() * s2.n(), std::move(es));
  return p;
}

/// Edge union of the cartesian and tensor products; parts[0]/parts[1] give
/// the decomposition back into those two layers.
inline ProductGraph strong(const SignedGraph& s1, const SignedGraph& s2) {
  ProductGraph c = cartesian(s1, s2);
  ProductGraph t = tensor(s1, s2);
  std::vector<Edge> es = c.graph.edges();
  es.insert(es.end(), t.graph.edges().begin(), t.graph.edges().end());
  ProductGraph p;
  p.n1 = s1.n();
  p.n2 = s2.n();
  p.kind = ProductKind::kStrong;
  p.graph = SignedGraph(s1.n() * s2.n(), std::move(es));
  p.parts.parts.resize(2);
  for (const Edge& e : c.graph.edges())
    p.parts.parts[0].push_back(p.graph.edge_index(e.u, e.v));
  for (const Edge& e : t.graph.edges())
    p.parts.parts[1].push_back(p.graph.edge_index(e.u, e.v));
  return p;
}

/// Corona: factor 1, n1 copies of factor 2, plus a star from the i-th vertex
/// of factor 1 to every vertex of copy i. Attachment-edge signs are an
/// explicit input in copy-major order: copy 0's n2 link signs come first.
inline ProductGraph corona(const SignedGraph& s1, const SignedGraph& s2,
                           const std::vector<int>& link_signs) {
  if (static_cast<int>(link_signs.size()) != s1.n() * s2.n())
    throw std::invalid_argument("corona: expected n1*n2 link signs");
  ProductGraph p;
  p.n1 = s1.n();
  p.n2 = s2.n();
  p.kind = ProductKind::kCorona;
  std::vector<Edge> es = s1.edges();
  for (int i = 0; i < s1.n(); ++i) {
    int base = s1.n() + i * s2.n();
    for (const Edge& e2 : s2.edges()) es.push_back({base + e2.u, base + e2.v, e2.sign});
    for (int j = 0; j < s2.n(); ++j) es.push_back({i, base + j, link_signs[i * s2.n() + j]});
  }
  p.graph = SignedGraph(s1.n() * (1 + s2.n()), std::move(es));
  return p;
}

// ---------------------------------------------------------------------------
// Projections
// ---------------------------------------------------------------------------

inline int project_vertex(const ProductGraph& p, int which, int v) {
  if (p.kind == ProductKind::kCorona)
    throw std::invalid_argument("project_vertex: undefined for corona products");
  if (which != 1 && which != 2) throw std::invalid_argument("project_vertex: which must be 1 or 2");
  if (v < 0 || v >= p.graph.n()) throw std::out_of_range("project_vertex: vertex out of range");
  return which == 1 ? p.first_coordinate(v) : p.second_coordinate(v);
}

/// Projection of a product edge onto a factor edge (pair of factor vertex
/// ids). Cartesian-layer edges only project on their varying side; asking for
/// the fixed side is an error. Tensor-layer edges project on both sides.
inline std::pair<int, int> project_edge(const ProductGraph& p, int which, int edge_idx) {
  if (p.kind == ProductKind::kCorona)
    throw std::invalid_argument("project_edge: undefined for corona products");
  const Edge& e = p.graph.edge(edge_idx);
  int a1 = p.first_coordinate(e.u), a2 = p.second_coordinate(e.u);
  int b1 = p.first_coordinate(e.v), b2 = p.second_coordinate(e.v);
  if (which == 1) {
    if (a1 == b1) throw std::invalid_argument("project_edge: edge is fixed on side 1");
    return {std::min(a1, b1), std::max(a1, b1)};
  }
  if (which == 2) {
    if (a2 == b2) throw std::invalid_argument("project_edge: edge is fixed on side 2");
    return {std::min(a2, b2), std::max(a2, b2)};
  }
  throw std::invalid_argument("project_edge: which must be 1 or 2");
}

inline Incidence project_incidence(const ProductGraph& p, int which,
                                   const SignedGraph& factor, const Incidence& inc) {
  auto [fu, fv] = project_edge(p, which, inc.edge);
  int ei = factor.edge_index(fu, fv);
  if (ei < 0) throw std::invalid_argument("project_incidence: projected edge not in factor");
  return {project_vertex(p, which, inc.vertex), ei};
}

}  // namespace sigraph
