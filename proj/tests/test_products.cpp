#include <catch2/catch_amalgamated.hpp>

#include "sigraph/products.hpp"
#include "test_util.hpp"

using namespace sigraph;

namespace {

/// Pair-transposed rebuild used to check commutativity up to relabeling.
bool isomorphic_by_transpose(const ProductGraph& ab, const ProductGraph& ba) {
  if (ab.graph.n() != ba.graph.n() || ab.graph.m() != ba.graph.m()) return false;
  for (const Edge& e : ab.graph.edges()) {
    int u = ba.pair_vertex(ab.second_coordinate(e.u), ab.first_coordinate(e.u));
    int v = ba.pair_vertex(ab.second_coordinate(e.v), ab.first_coordinate(e.v));
    int ei = ba.graph.edge_index(u, v);
    if (ei < 0 || ba.graph.edge(ei).sign != e.sign) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cartesian of two single edges is a balanced C4") {
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      ProductGraph p = cartesian(make_path(2, {s1}), make_path(2, {s2}));
      CHECK(p.graph.n() == 4);
      CHECK(p.graph.m() == 4);
      CHECK(is_cycle_graph(p.graph));
      CHECK(is_balanced(p.graph));
    }
}

TEST_CASE("cartesian counts and degree formula") {
  SignedGraph c3 = make_cycle(3, {1, -1, 1});
  SignedGraph c4 = make_cycle(4, {1, 1, -1, -1});
  ProductGraph p = cartesian(c3, c4);
  CHECK(p.graph.n() == 12);
  CHECK(p.graph.m() == 24);  // n1*m2 + n2*m1

  SplitMix64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    SignedGraph a = test_util::random_signed_graph(2 + rng.below(5), 1 + rng.below(6), rng);
    SignedGraph b = test_util::random_signed_graph(2 + rng.below(5), 1 + rng.below(6), rng);
    ProductGraph q = cartesian(a, b);
    for (int i = 0; i < a.n(); ++i)
      for (int j = 0; j < b.n(); ++j)
        CHECK(q.graph.degree(q.pair_vertex(i, j)) == a.degree(i) + b.degree(j));
    CHECK(max_degree(q.graph) == max_degree(a) + max_degree(b));
  }
}

TEST_CASE("tensor counts, signs and degree product") {
  ProductGraph t = tensor(make_path(2, {1}), make_path(2, {-1}));
  CHECK(t.graph.n() == 4);
  CHECK(t.graph.m() == 2);
  for (const Edge& e : t.graph.edges()) CHECK(e.sign == -1);

  SplitMix64 rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    SignedGraph a = test_util::random_signed_graph(2 + rng.below(4), 1 + rng.below(5), rng);
    SignedGraph b = test_util::random_signed_graph(2 + rng.below(4), 1 + rng.below(5), rng);
    ProductGraph q = tensor(a, b);
    CHECK(q.graph.m() == 2 * a.m() * b.m());
    for (int i = 0; i < a.n(); ++i)
      for (int j = 0; j < b.n(); ++j)
        CHECK(q.graph.degree(q.pair_vertex(i, j)) == a.degree(i) * b.degree(j));
    CHECK(max_degree(q.graph) == max_degree(a) * max_degree(b));
  }
}

TEST_CASE("strong product is the union with a valid decomposition") {
  ProductGraph s = strong(make_path(2, {1}), make_path(2, {-1}));
  CHECK(s.graph.n() == 4);
  CHECK(s.graph.m() == 6);  // K4
  CHECK(max_degree(s.graph) == 3);
  CHECK(validate_decomposition(s.graph, s.parts));

  SplitMix64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    SignedGraph a = test_util::random_signed_graph(2 + rng.below(4), 1 + rng.below(4), rng);
    SignedGraph b = test_util::random_signed_graph(2 + rng.below(4), 1 + rng.below(4), rng);
    ProductGraph q = strong(a, b);
    CHECK(validate_decomposition(q.graph, q.parts));
    ProductGraph c = cartesian(a, b);
    ProductGraph t = tensor(a, b);
    // the parts are exactly the two layers, edge for edge
    REQUIRE(q.parts.parts.size() == 2);
    CHECK(static_cast<int>(q.parts.parts[0].size()) == c.graph.m());
    CHECK(static_cast<int>(q.parts.parts[1].size()) == t.graph.m());
    for (int ei : q.parts.parts[0]) {
      const Edge& e = q.graph.edge(ei);
      int ci = c.graph.edge_index(e.u, e.v);
      REQUIRE(ci >= 0);
      CHECK(c.graph.edge(ci).sign == e.sign);
    }
    for (int ei : q.parts.parts[1]) {
      const Edge& e = q.graph.edge(ei);
      int ti = t.graph.edge_index(e.u, e.v);
      REQUIRE(ti >= 0);
      CHECK(t.graph.edge(ti).sign == e.sign);
    }
    for (int i = 0; i < a.n(); ++i)
      for (int j = 0; j < b.n(); ++j)
        CHECK(q.graph.degree(q.pair_vertex(i, j)) ==
              a.degree(i) + b.degree(j) + a.degree(i) * b.degree(j));
  }
}

TEST_CASE("products of edgeless factors are edgeless") {
  SignedGraph empty(3, {});
  SignedGraph p2 = make_path(2, {1});
  CHECK(cartesian(empty, empty).graph.m() == 0);
  CHECK(tensor(empty, p2).graph.m() == 0);
  CHECK(strong(empty, empty).graph.m() == 0);
}

TEST_CASE("products commute up to pair transposition") {
  SplitMix64 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    SignedGraph a = test_util::random_signed_graph(2 + rng.below(4), 1 + rng.below(4), rng);
    SignedGraph b = test_util::random_signed_graph(2 + rng.below(4), 1 + rng.below(4), rng);
    CHECK(isomorphic_by_transpose(cartesian(a, b), cartesian(b, a)));
    CHECK(isomorphic_by_transpose(tensor(a, b), tensor(b, a)));
    CHECK(isomorphic_by_transpose(strong(a, b), strong(b, a)));
  }
}

TEST_CASE("cartesian of balanced factors is balanced") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    SignedGraph a = test_util::random_balanced_cycle(3 + rng.below(3), rng);
    SignedGraph b = test_util::random_signed_tree(2 + rng.below(4), rng);
    CHECK(is_balanced(cartesian(a, b).graph));
  }
}

TEST_CASE("corona layout, sizes and signs") {
  SignedGraph p4 = make_path(4, {1, -1, 1});
  SignedGraph k3 = make_complete(3, {1, 1, -1});
  std::vector<int> links(12, 1);
  links[0] = -1;
  ProductGraph c = corona(p4, k3, links);
  CHECK(c.graph.n() == 16);  // 4 + 4*3
  CHECK(c.graph.m() == p4.m() + 4 * k3.m() + 12);
  CHECK(max_degree(c.graph) == max_degree(p4) + k3.n());

  // copy 0 keeps factor-2 signs, links are copy-major
  int e01 = c.graph.edge_index(c.corona_copy_vertex(0, 0), c.corona_copy_vertex(0, 2));
  REQUIRE(e01 >= 0);
  CHECK(c.graph.edge(e01).sign == 1);
  int l00 = c.graph.edge_index(c.corona_attachment(0), c.corona_copy_vertex(0, 0));
  REQUIRE(l00 >= 0);
  CHECK(c.graph.edge(l00).sign == -1);

  ProductGraph single = corona(make_path(1, {}), make_path(1, {}), {-1});
  CHECK(single.graph.m() == 1);
  CHECK(single.graph.edge(0).sign == -1);

  CHECK_THROWS_AS(corona(p4, k3, {1, 1}), std::invalid_argument);
}

TEST_CASE("corona degree formula on random factors") {
  SplitMix64 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    int n1 = 2 + static_cast<int>(rng.below(4));
    SignedGraph g1 = test_util::random_signed_graph(n1, 1 + rng.below(n1 * (n1 - 1) / 2), rng);
    int n2 = 1 + static_cast<int>(rng.below(3));
    int m2max = n2 * (n2 - 1) / 2;
    SignedGraph g2 = test_util::random_signed_graph(n2, rng.below(m2max + 1), rng);
    ProductGraph c = corona(g1, g2, test_util::random_signs(n1 * n2, rng));
    CHECK(max_degree(c.graph) == max_degree(g1) + g2.n());
  }
}

TEST_CASE("projections") {
  SplitMix64 rng(79);
  SignedGraph a = test_util::random_signed_graph(4, 4, rng);
  SignedGraph b = make_cycle(5, {1, 1, -1, 1, -1});
  ProductGraph p = cartesian(a, b);
  CHECK(project_vertex(p, 1, p.pair_vertex(2, 3)) == 2);
  CHECK(project_vertex(p, 2, p.pair_vertex(2, 3)) == 3);

  // a copy-of-b edge projects to b on side 2 and errors on side 1
  int e = p.graph.edge_index(p.pair_vertex(1, 0), p.pair_vertex(1, 1));
  REQUIRE(e >= 0);
  auto [fu, fv] = project_edge(p, 2, e);
  CHECK(fu == 0);
  CHECK(fv == 1);
  CHECK_THROWS_AS(project_edge(p, 1, e), std::invalid_argument);

  Incidence inc{p.pair_vertex(1, 1), e};
  Incidence pi = project_incidence(p, 2, b, inc);
  CHECK(pi.vertex == 1);
  CHECK(pi.edge == b.edge_index(0, 1));

  ProductGraph t = tensor(make_path(2, {1}), make_path(2, {-1}));
  int te = 0;
  CHECK_NOTHROW(project_edge(t, 1, te));
  CHECK_NOTHROW(project_edge(t, 2, te));
}
