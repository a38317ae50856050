#include <catch2/catch_amalgamated.hpp>

#include "sigraph/json_io.hpp"
#include "sigraph/signed_graph.hpp"
#include "test_util.hpp"

using namespace sigraph;

TEST_CASE("construction canonicalizes and validates") {
  SignedGraph a(3, {{1, 0, 1}, {2, 1, -1}});
  SignedGraph b(3, {{1, 2, -1}, {0, 1, 1}});
  CHECK(a == b);
  CHECK(a.edge(0).u == 0);
  CHECK(a.edge(0).v == 1);
  CHECK(hash(a) == hash(b));

  CHECK_THROWS_AS(SignedGraph(2, {{0, 0, 1}}), std::invalid_argument);       // self-loop
  CHECK_THROWS_AS(SignedGraph(2, {{0, 1, 1}, {1, 0, -1}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(SignedGraph(2, {{0, 1, 2}}), std::invalid_argument);       // bad sign
  CHECK_THROWS_AS(SignedGraph(2, {{0, 2, 1}}), std::invalid_argument);       // out of range
}

TEST_CASE("family generators") {
  SignedGraph p1 = make_path(1, {});
  CHECK(p1.n() == 1);
  CHECK(p1.m() == 0);

  SignedGraph p3 = make_path(3, {1, -1});
  REQUIRE(p3.m() == 2);
  CHECK(p3.edge(0).sign == 1);
  CHECK(p3.edge(1).sign == -1);

  SignedGraph p2 = make_path(2, {-1});
  CHECK(p2.edge(0).sign == -1);

  CHECK_THROWS_AS(make_path(3, {1}), std::invalid_argument);
  CHECK_THROWS_AS(make_cycle(2, {1, 1}), std::invalid_argument);

  SignedGraph c4 = make_cycle(4, {1, -1, 1, -1});
  CHECK(c4.m() == 4);
  CHECK(is_balanced(c4));

  SignedGraph c5 = make_cycle(5, {-1, 1, 1, 1, 1});
  CHECK_FALSE(is_balanced(c5));

  SignedGraph k4 = make_complete(4, std::vector<int>(6, -1));
  CHECK(k4.m() == 6);
  CHECK(negative_edge_count(k4) == 6);
  CHECK(make_complete(2, {1}).m() == 1);
  CHECK(is_balanced(make_complete(3, {1, 1, 1})));
}

TEST_CASE("switching behaves like the definition") {
  SignedGraph p2 = make_path(2, {1});
  SignedGraph sw = switched(p2, VertexSet(2, {0}));
  CHECK(sw.edge(0).sign == -1);

  SplitMix64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    SignedGraph g = test_util::random_signed_graph(6, 8, rng);
    VertexSet x = test_util::random_vertex_set(6, rng);
    SignedGraph once = switched(g, x);
    CHECK(switched(g, VertexSet(6)) == g);       // empty set: identity
    CHECK(switched(once, x) == g);               // involution
    CHECK(once.n() == g.n());
    CHECK(once.m() == g.m());
    CHECK(is_balanced(g) == is_balanced(once));  // cycle signs preserved
  }
}

TEST_CASE("cycle_sign matches the sign product") {
  SignedGraph c3 = make_cycle(3, {1, 1, 1});
  CHECK(cycle_sign(c3, {0, 1, 2}) == 1);
  CHECK(cycle_sign(make_cycle(4, {-1, 1, 1, 1}), {0, 1, 2, 3}) == -1);
  CHECK(cycle_sign(make_cycle(4, {-1, -1, 1, 1}), {0, 1, 2, 3}) == 1);
  CHECK_THROWS_AS(cycle_sign(c3, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_sign(make_path(4, {1, 1, 1}), {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("cycle sign is switching invariant") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    SignedGraph c = make_cycle(5, test_util::random_signs(5, rng));
    VertexSet x = test_util::random_vertex_set(5, rng);
    CHECK(cycle_sign(c, {0, 1, 2, 3, 4}) == cycle_sign(switched(c, x), {0, 1, 2, 3, 4}));
  }
}

TEST_CASE("balance via potential and the constructive witness") {
  CHECK(is_balanced(make_cycle(4, {1, -1, 1, -1})));
  CHECK_FALSE(is_balanced(make_cycle(3, {-1, 1, 1})));
  CHECK(is_balanced(make_path(5, {1, -1, -1, 1})));  // forests are balanced
  CHECK(is_balanced(SignedGraph(0, {})));
  CHECK(is_balanced(SignedGraph(3, {})));

  SplitMix64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    SignedGraph g = test_util::random_signed_graph(7, 10, rng);
    if (is_balanced(g)) {
      SignedGraph pos = switched(g, switching_to_all_positive(g));
      CHECK(negative_edge_count(pos) == 0);
    } else {
      CHECK_THROWS_AS(switching_to_all_positive(g), std::invalid_argument);
    }
  }
}

TEST_CASE("balance on disconnected graphs is per component") {
  // balanced C3 plus unbalanced C3
  SignedGraph g(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, -1}, {4, 5, 1}, {3, 5, 1}});
  CHECK_FALSE(is_balanced(g));
  SignedGraph h(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, -1}, {4, 5, -1}, {3, 5, 1}});
  CHECK(is_balanced(h));
}

TEST_CASE("max_degree and regularity") {
  CHECK(max_degree(make_path(4, {1, 1, 1})) == 2);
  CHECK(max_degree(make_complete(4, std::vector<int>(6, 1))) == 3);
  CHECK(max_degree(SignedGraph(5, {})) == 0);
  int d = 0;
  CHECK(is_regular(make_cycle(6, std::vector<int>(6, 1)), &d));
  CHECK(d == 2);
  CHECK_FALSE(is_regular(make_path(4, {1, 1, 1})));
}

TEST_CASE("decomposition validation") {
  SignedGraph c4 = make_cycle(4, {1, 1, 1, 1});
  Decomposition all{{{0, 1, 2, 3}}};
  CHECK(validate_decomposition(c4, all));
  Decomposition overlapping{{{0, 1}, {1, 2, 3}}};
  CHECK_FALSE(validate_decomposition(c4, overlapping));
  Decomposition missing{{{0, 1}, {3}}};
  CHECK_FALSE(validate_decomposition(c4, missing));
}

TEST_CASE("shape predicates and walks") {
  CHECK(is_path_graph(make_path(5, {1, 1, 1, 1})));
  CHECK_FALSE(is_path_graph(make_cycle(4, {1, 1, 1, 1})));
  CHECK(is_cycle_graph(make_cycle(3, {1, 1, 1})));
  CHECK(is_forest(make_path(4, {1, 1, 1})));
  CHECK(is_forest(SignedGraph(3, {})));
  CHECK_FALSE(is_forest(make_cycle(3, {1, 1, 1})));

  auto order = path_order(make_path(4, {1, 1, 1}));
  CHECK(order == std::vector<int>{0, 1, 2, 3});
  auto corder = cycle_order(make_cycle(4, {1, 1, 1, 1}));
  CHECK(corder == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("edge subgraph keeps canonical order and maps back") {
  SignedGraph g = make_cycle(5, {1, -1, 1, -1, 1});
  Subgraph sub = edge_subgraph(g, {4, 1, 2});  // edges (0,4),(1,2),(2,3)
  CHECK(sub.graph.n() == 5);  // vertices 0,1,2,3,4 all touched
  CHECK(sub.graph.m() == 3);
  for (int le = 0; le < sub.graph.m(); ++le) {
    const Edge& e = sub.graph.edge(le);
    int host = sub.edges[le];
    CHECK(g.edge(host).sign == e.sign);
    CHECK(g.edge(host).u == sub.vertices[e.u]);
    CHECK(g.edge(host).v == sub.vertices[e.v]);
  }
}

TEST_CASE("edge components") {
  SignedGraph g(7, {{0, 1, 1}, {1, 2, -1}, {3, 4, 1}, {5, 6, -1}});
  auto comps = edge_components(g);
  CHECK(comps.size() == 3);
}

TEST_CASE("graph json round trip and rejection") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    SignedGraph g = test_util::random_signed_graph(6, 7, rng);
    CHECK(graph_from_json(to_json(g)) == g);
  }

  CHECK_THROWS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 0, 1]]})")));
  CHECK_THROWS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 1, 1], [1, 0, 1]]})")));
  CHECK_THROWS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 1, 3]]})")));
  CHECK_THROWS(graph_from_json(json::parse(R"({"edges": []})")));
  // unsorted input is canonicalized, not rejected
  SignedGraph g = graph_from_json(json::parse(R"({"n": 3, "edges": [[2, 1, -1], [0, 1, 1]]})"));
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(1).sign == -1);
}

TEST_CASE("seeded tree generator is deterministic") {
  SignedGraph a = make_random_tree(8, 42);
  SignedGraph b = make_random_tree(8, 42);
  CHECK(a == b);
  CHECK(a.m() == 7);
  CHECK(is_forest(a));
  CHECK(is_connected(a));
}
