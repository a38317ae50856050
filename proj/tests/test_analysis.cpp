#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "sigraph/analysis.hpp"
#include "test_util.hpp"

using namespace sigraph;

TEST_CASE("full class ratios of small named graphs") {
  // C3: the 4 balanced signatures of 8
  ClassRatioReport c3 = class_ratio_full(make_cycle(3, {1, 1, 1}));
  CHECK(c3.total == 8);
  CHECK(c3.delta_colorable == 4);
  CHECK(c3.ratio_string() == "1/2");

  // paths are always Delta-colorable
  ClassRatioReport p3 = class_ratio_full(make_path(3, {1, 1}));
  CHECK(p3.total == 4);
  CHECK(p3.ratio_string() == "1/1");

  // C4: balanced iff evenly many negatives
  ClassRatioReport c4 = class_ratio_full(make_cycle(4, {1, 1, 1, 1}));
  CHECK(c4.total == 16);
  CHECK(c4.delta_colorable == 8);
  CHECK(c4.ratio_string() == "1/2");

  CHECK_THROWS_AS(class_ratio_full(make_complete(8, std::vector<int>(28, 1))),
                  std::invalid_argument);
}

TEST_CASE("balanced count doubles as an independent oracle for cycles") {
  // brute-force count of balanced signatures, computed via cycle_sign rather
  // than the coloring machinery
  for (int len = 3; len <= 6; ++len) {
    SignedGraph base = make_cycle(len, std::vector<int>(len, 1));
    long long balanced = 0;
    std::vector<int> walk(len);
    std::iota(walk.begin(), walk.end(), 0);
    for (std::uint64_t idx = 0; idx < (1ull << len); ++idx) {
      SignedGraph s = make_cycle(len, test_util::signs_from_index(len, idx));
      if (cycle_sign(s, walk) == 1) ++balanced;
    }
    ClassRatioReport rep = class_ratio_full(base);
    CHECK(rep.delta_colorable == balanced);
  }
}

TEST_CASE("coset enumeration equals full enumeration") {
  SplitMix64 rng(167);
  std::vector<SignedGraph> graphs{
      make_cycle(3, {1, 1, 1}),
      make_cycle(4, {1, 1, 1, 1}),
      make_cycle(5, {1, 1, 1, 1, 1}),
      make_path(4, {1, 1, 1}),
      make_complete(4, std::vector<int>(6, 1)),
  };
  for (int trial = 0; trial < 4; ++trial)
    graphs.push_back(test_util::random_signed_graph(5, 7, rng));
  for (const SignedGraph& g : graphs) {
    ClassRatioReport full = class_ratio_full(g);
    ClassRatioReport cosets = class_ratio_cosets(g);
    CHECK(full.ratio_num == cosets.ratio_num);
    CHECK(full.ratio_den == cosets.ratio_den);
  }
}

TEST_CASE("every switching class has 2^(n-c) members") {
  // expand one coset fully on a small graph: all switchings of a
  // representative stay in the class and hit 2^(n-1) distinct signatures
  SignedGraph g = make_cycle(4, {-1, 1, 1, 1});
  std::set<std::vector<int>> signatures;
  for (std::uint64_t mask = 0; mask < (1ull << g.n()); ++mask) {
    VertexSet x(g.n());
    for (int v = 0; v < g.n(); ++v)
      if (mask >> v & 1) x.set(v);
    SignedGraph sw = switched(g, x);
    std::vector<int> sig;
    for (const Edge& e : sw.edges()) sig.push_back(e.sign);
    signatures.insert(sig);
  }
  CHECK(signatures.size() == 8);  // 2^(4-1)
}

TEST_CASE("chunked counting merges associatively and ignores parallelism") {
  SignedGraph g = make_cycle(5, {1, 1, 1, 1, 1});
  SignatureFamily fam = full_signature_family(g);
  CountChunk whole = count_chunk(fam, 0, fam.size());
  CountChunk merged;
  for (std::uint64_t lo = 0; lo < fam.size(); lo += 5)
    merged += count_chunk(fam, lo, std::min<std::uint64_t>(lo + 5, fam.size()));
  CHECK(merged.total == whole.total);
  CHECK(merged.delta == whole.delta);

  CountChunk parallel = count_family(fam, true, 4);
  CHECK(parallel.total == whole.total);
  CHECK(parallel.delta == whole.delta);
}

TEST_CASE("parity pruning does not change any count") {
  SplitMix64 rng(173);
  for (int trial = 0; trial < 6; ++trial) {
    SignedGraph g = test_util::random_signed_graph(5, 6, rng);
    ClassRatioReport with = class_ratio_full(g, 20, true);
    ClassRatioReport without = class_ratio_full(g, 20, false);
    CHECK(with.delta_colorable == without.delta_colorable);
  }
  // 2-regular case where the certificate actually fires
  ClassRatioReport with = class_ratio_full(make_cycle(5, std::vector<int>(5, 1)), 20, true);
  ClassRatioReport without = class_ratio_full(make_cycle(5, std::vector<int>(5, 1)), 20, false);
  CHECK(with.delta_colorable == without.delta_colorable);
}

TEST_CASE("product-induced ratios reproduce the cycle table") {
  ClassRatioReport even_even = class_ratio_product_induced(4, 4);
  CHECK(even_even.ratio_string() == "1/1");
  ClassRatioReport mixed = class_ratio_product_induced(4, 5);
  CHECK(mixed.ratio_string() == "1/2");
  ClassRatioReport odd_odd = class_ratio_product_induced(3, 5);
  CHECK(odd_odd.ratio_string() == "1/4");
  // breakdown names the winning balance patterns
  REQUIRE(odd_odd.breakdown.size() == 4);
  CHECK(odd_odd.breakdown[0].first == "balanced*balanced");
  CHECK(odd_odd.breakdown[0].second > 0);
  CHECK(odd_odd.breakdown[3].second == 0);
}

TEST_CASE("complete-graph conjecture probes") {
  // Odd n makes K_n even-regular, so any representative with an odd number
  // of negative edges needs Delta+1 colors: the probe must surface those
  // counterexamples. Even n has no such obstruction and comes back clean.
  ProbeReport n3 = probe_complete_conjecture(3);
  CHECK_FALSE(n3.ok);
  CHECK_FALSE(n3.counterexample.empty());
  ProbeReport n4 = probe_complete_conjecture(4);
  CHECK(n4.ok);
  CHECK(n4.checked == 8);
  ProbeReport n5 = probe_complete_conjecture(5);
  CHECK_FALSE(n5.ok);
  CHECK_FALSE(n5.counterexample.empty());
  CHECK_THROWS_AS(probe_complete_conjecture(6), std::invalid_argument);

  // the reported counterexamples carry the parity obstruction
  for (const ProbeReport& rep : {n3, n5}) {
    long long negatives = std::count(rep.counterexample.begin(), rep.counterexample.end(), '-');
    CHECK(negatives % 2 == 1);
  }
}

TEST_CASE("joined-cliques conjecture probes") {
  ProbeReport n2 = probe_joined_cliques_conjecture(2);
  CHECK(n2.ok);
  ProbeReport n3 = probe_joined_cliques_conjecture(3);
  CHECK(n3.ok);
  CHECK(n3.checked == 4);  // 2^(7-6+1)
}

TEST_CASE("mirrored coloring for consistent joined cliques") {
  SplitMix64 rng(179);
  for (int n : {2, 3, 4}) {
    int m = n * (n - 1) / 2;
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<int> sig = test_util::random_signs(m, rng);
      int join = rng.sign();
      IncidenceColoring c = joined_cliques_mirrored_coloring(n, sig, join);
      SignedGraph joined = joined_cliques(n, sig, sig, join);
      CHECK(c.k == n);
      CHECK(verify_coloring(joined, c).ok);
    }
  }
  // exhaustive at n = 4: all clique signatures and both join signs
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    for (int join : {1, -1}) {
      std::vector<int> sig = test_util::signs_from_index(6, idx);
      IncidenceColoring c = joined_cliques_mirrored_coloring(4, sig, join);
      CHECK(verify_coloring(joined_cliques(4, sig, sig, join), c).ok);
      CHECK(c.k == 4);
    }
  }
}
