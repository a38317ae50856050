#include <catch2/catch_amalgamated.hpp>

#include "sigraph/base_colorings.hpp"
#include "sigraph/oracle.hpp"
#include "test_util.hpp"

using namespace sigraph;

TEST_CASE("cycle decisions match the balanced criterion") {
  SignedGraph unbalanced_c4 = make_cycle(4, {-1, 1, 1, 1});
  CHECK_FALSE(decide_k_colorable(unbalanced_c4, 2).has_value());

  SignedGraph balanced_c4 = make_cycle(4, {1, -1, 1, -1});
  auto c = decide_k_colorable(balanced_c4, 2);
  REQUIRE(c.has_value());
  CHECK(verify_coloring(balanced_c4, *c).ok);
}

TEST_CASE("a single edge is 1-colorable with color 0") {
  SignedGraph e = make_path(2, {1});
  auto c = decide_k_colorable(e, 1);
  REQUIRE(c.has_value());
  CHECK(c->values[0][0] == 0);
  CHECK(c->values[0][1] == 0);
  auto neg = decide_k_colorable(make_path(2, {-1}), 1);
  REQUIRE(neg.has_value());
  CHECK(neg->values[0] == std::array<int, 2>{0, 0});
}

TEST_CASE("exact chromatic index on the named families") {
  for (std::uint64_t sig = 0; sig < 16; ++sig) {
    SignedGraph p5 = make_path(5, test_util::signs_from_index(4, sig));
    CHECK(exact_chromatic_index(p5).first == 2);  // every signed path
  }
  SignedGraph c3 = make_cycle(3, {-1, 1, 1});
  CHECK(exact_chromatic_index(c3).first == 3);
  SignedGraph k4 = make_complete(4, std::vector<int>(6, 1));
  CHECK(exact_chromatic_index(k4).first == 3);
  CHECK_THROWS_AS(exact_chromatic_index(SignedGraph(3, {})), std::invalid_argument);
}

TEST_CASE("witnesses are deterministic") {
  SignedGraph g = make_cycle(6, {1, -1, 1, 1, -1, 1});
  auto a = exact_chromatic_index(g);
  auto b = exact_chromatic_index(g);
  CHECK(a.first == b.first);
  CHECK(a.second.values == b.second.values);
}

TEST_CASE("chromatic index sits in the Vizing-style window") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(6));
    int maxm = std::min(10, n * (n - 1) / 2);
    int m = 1 + static_cast<int>(rng.below(maxm));
    SignedGraph g = test_util::random_signed_graph(n, m, rng);
    auto [chi, witness] = exact_chromatic_index(g);
    int delta = max_degree(g);
    CHECK(chi >= delta);
    CHECK(chi <= delta + 1);
    CHECK(witness.k == chi);
    CHECK(verify_coloring(g, witness).ok);
  }
}

TEST_CASE("chromatic index is switching invariant") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    SignedGraph g = test_util::random_signed_graph(6, 8, rng);
    VertexSet x = test_util::random_vertex_set(6, rng);
    CHECK(exact_chromatic_index(g).first == exact_chromatic_index(switched(g, x)).first);
  }
}

TEST_CASE("k-colorability is monotone in k") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    SignedGraph g = test_util::random_signed_graph(5, 6, rng);
    int delta = max_degree(g);
    bool prev = false;
    for (int k = 1; k <= delta + 2; ++k) {
      bool now = decide_k_colorable(g, k).has_value();
      if (prev) CHECK(now);
      prev = now;
    }
  }
}

TEST_CASE("guards") {
  SignedGraph e = make_path(2, {1});
  CHECK_THROWS_AS(decide_k_colorable(e, 0), std::invalid_argument);
}
