#include <catch2/catch_amalgamated.hpp>

#include "sigraph/corona.hpp"
#include "sigraph/oracle.hpp"
#include "test_util.hpp"

using namespace sigraph;

namespace {

void check_corona_coloring(const SignedGraph& g1, const SignedGraph& g2,
                           const std::vector<int>& links, bool oracle_check) {
  ProductGraph cor = corona(g1, g2, links);
  IncidenceColoring c = color_corona(g1, g2, links);
  CHECK(c.k == max_degree(g1) + g2.n());
  CHECK(c.k == max_degree(cor.graph));
  CHECK(verify_coloring(cor.graph, c).ok);
  if (oracle_check && cor.graph.m() <= 20)
    CHECK(exact_chromatic_index(cor.graph).first == max_degree(cor.graph));
}

}  // namespace

TEST_CASE("corona coloring: triangle base with single-vertex copies") {
  // every signature of C3 . K1 (3 base edges + 3 links)
  SignedGraph k1(1, {});
  for (std::uint64_t base = 0; base < 8; ++base) {
    for (std::uint64_t ls = 0; ls < 8; ++ls) {
      SignedGraph c3 = make_cycle(3, test_util::signs_from_index(3, base));
      check_corona_coloring(c3, k1, test_util::signs_from_index(3, ls), true);
    }
  }
}

TEST_CASE("corona coloring: triangle base with edge copies") {
  SplitMix64 rng(149);
  SignedGraph k2 = make_complete(2, {1});
  for (int trial = 0; trial < 40; ++trial) {
    SignedGraph c3 = make_cycle(3, test_util::random_signs(3, rng));
    SignedGraph copy = with_signs(k2, test_util::random_signs(1, rng));
    check_corona_coloring(c3, copy, test_util::random_signs(6, rng), true);
  }
}

TEST_CASE("corona coloring: square base with path copies") {
  SplitMix64 rng(151);
  for (int trial = 0; trial < 30; ++trial) {
    SignedGraph c4 = make_cycle(4, test_util::random_signs(4, rng));
    SignedGraph p2 = make_path(2, {rng.sign()});
    check_corona_coloring(c4, p2, test_util::random_signs(8, rng), true);
  }
}

TEST_CASE("corona coloring: non-regular base graphs") {
  SplitMix64 rng(157);
  // P3 . P3 — the base is padded to a regular supergraph internally
  for (int trial = 0; trial < 25; ++trial) {
    SignedGraph p3 = make_path(3, test_util::random_signs(2, rng));
    SignedGraph copy = make_path(3, test_util::random_signs(2, rng));
    check_corona_coloring(p3, copy, test_util::random_signs(9, rng), true);
  }
  // a tree base with Delta 3
  SignedGraph star(4, {{0, 1, 1}, {0, 2, -1}, {0, 3, 1}});
  check_corona_coloring(star, make_path(2, {-1}), test_util::random_signs(8, rng), false);
}

TEST_CASE("corona coloring: all-negative instance") {
  SignedGraph c4 = make_cycle(4, {-1, -1, -1, -1});
  SignedGraph p3 = make_path(3, {-1, -1});
  check_corona_coloring(c4, p3, std::vector<int>(12, -1), false);
}

TEST_CASE("corona coloring: larger copies and degree parity mix") {
  SplitMix64 rng(163);
  // K3 copies (n2 = 3), C3 base: Delta(S) = 5 (odd palette)
  for (int trial = 0; trial < 10; ++trial) {
    SignedGraph c3 = make_cycle(3, test_util::random_signs(3, rng));
    SignedGraph k3 = make_complete(3, test_util::random_signs(3, rng));
    check_corona_coloring(c3, k3, test_util::random_signs(9, rng), false);
  }
  // K4 base (Delta 3), K2 copies: Delta(S) = 5
  for (int trial = 0; trial < 10; ++trial) {
    SignedGraph k4 = make_complete(4, test_util::random_signs(6, rng));
    SignedGraph k2 = make_complete(2, test_util::random_signs(1, rng));
    check_corona_coloring(k4, k2, test_util::random_signs(8, rng), false);
  }
  // edgeless copies (stars only)
  for (int trial = 0; trial < 10; ++trial) {
    SignedGraph c3 = make_cycle(3, test_util::random_signs(3, rng));
    SignedGraph bare(2, {});
    check_corona_coloring(c3, bare, test_util::random_signs(6, rng), true);
  }
}

TEST_CASE("corona coloring rejects low-degree bases and bad link counts") {
  SignedGraph p2 = make_path(2, {1});
  SignedGraph k1(1, {});
  CHECK_THROWS_AS(color_corona(p2, k1, {1, 1}), std::invalid_argument);
  SignedGraph c3 = make_cycle(3, {1, 1, 1});
  CHECK_THROWS_AS(color_corona(c3, k1, {1, 1}), std::invalid_argument);
}

TEST_CASE("padding to a regular supergraph") {
  SignedGraph p3 = make_path(3, {1, -1});
  SignedGraph padded = detail::pad_to_regular(p3);
  int d = 0;
  CHECK(is_regular(padded, &d));
  CHECK(d == 2);
  CHECK(padded.n() == 6);
  // original edges survive with their signs
  CHECK(padded.edge_index(0, 1) >= 0);
  CHECK(padded.edge(padded.edge_index(1, 2)).sign == -1);

  SignedGraph reg = make_cycle(5, {1, 1, 1, -1, -1});
  CHECK(detail::pad_to_regular(reg) == reg);
}
