#pragma once

#include <future>
#include <numeric>
#include <string>

#include "sigraph/oracle.hpp"
#include "sigraph/theorems.hpp"

namespace sigraph {

/// Counts of Delta-colorable signatures against the enumerated total, as an
/// exact reduced rational, with a per-balance-pattern breakdown where the
/// strategy has one.
struct ClassRatioReport {
  long long total = 0;
  long long delta_colorable = 0;
  long long ratio_num = 0;
  long long ratio_den = 1;
  std::string strategy;
  std::vector<std::pair<std::string, long long>> breakdown;

  void reduce() {
    long long g = std::gcd(delta_colorable, total);
    if (g == 0) g = 1;
    ratio_num = delta_colorable / g;
    ratio_den = total / g;
  }
  std::string ratio_string() const {
    return std::to_string(ratio_num) + "/" + std::to_string(ratio_den);
  }
};

/// A family of signatures over one underlying graph: the listed edges range
/// over +-1 (bit i of a signature index flips free edge i), all other edges
/// keep the base sign.
struct SignatureFamily {
  SignedGraph base;
  std::vector<int> free_edges;

  std::uint64_t size() const { return 1ull << free_edges.size(); }

  SignedGraph instantiate(std::uint64_t index) const {
    std::vector<int> signs(base.m());
    for (int ei = 0; ei < base.m(); ++ei) signs[ei] = base.edge(ei).sign;
    for (std::size_t i = 0; i < free_edges.size(); ++i)
      signs[free_edges[i]] = (index >> i & 1) ? -1 : 1;
    return with_signs(base, signs);
  }
};

namespace detail {

inline std::vector<int> spanning_forest_edges(const SignedGraph& g) {
  std::vector<char> seen(g.n(), 0);
  std::vector<int> tree;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, ei] : g.adjacent(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          tree.push_back(ei);
          stack.push_back(w);
        }
      }
    }
  }
  return tree;
}

}  // namespace detail

/// All 2^m signatures of the underlying graph.
inline SignatureFamily full_signature_family(const SignedGraph& g) {
  SignatureFamily fam;
  fam.base = with_signs(g, std::vector<int>(g.m(), 1));
  fam.free_edges.resize(g.m());
  std::iota(fam.free_edges.begin(), fam.free_edges.end(), 0);
  return fam;
}

/// One representative per switching class: signatures that are positive on a
/// fixed spanning forest. The chromatic index is constant on each class and
/// every class has exactly 2^(n-c) members, so ratios over representatives
/// equal ratios over all signatures.
inline SignatureFamily coset_signature_family(const SignedGraph& g) {
  SignatureFamily fam;
  fam.base = with_signs(g, std::vector<int>(g.m(), 1));
  std::vector<int> forest = detail::spanning_forest_edges(g);
  std::vector<char> pinned(g.m(), 0);
  for (int ei : forest) pinned[ei] = 1;
  for (int ei = 0; ei < g.m(); ++ei)
    if (!pinned[ei]) fam.free_edges.push_back(ei);
  return fam;
}

/// Delta-colorability decision used by the enumerations; the parity
/// certificate short-circuits the search on even-regular graphs.
inline bool delta_colorable(const SignedGraph& g, bool parity_pruning = true) {
  if (g.m() == 0) return true;
  if (parity_pruning && parity_lower_bound(g).has_value()) return false;
  return decide_k_colorable(g, max_degree(g)).has_value();
}

/// Partial enumeration result; merging is associative and commutative, so
/// chunked runs are order-independent and resumable.
struct CountChunk {
  long long total = 0;
  long long delta = 0;

  CountChunk& operator+=(const CountChunk& o) {
    total += o.total;
    delta += o.delta;
    return *this;
  }
};

/// Count Delta-colorable signatures for indices in [begin, end).
inline CountChunk count_chunk(const SignatureFamily& fam, std::uint64_t begin, std::uint64_t end,
                              bool parity_pruning = true) {
  CountChunk out;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    ++out.total;
    if (delta_colorable(fam.instantiate(idx), parity_pruning)) ++out.delta;
  }
  return out;
}

/// Full-family count, optionally fanned out over worker threads. The merge is
/// a sum, so the result does not depend on the degree of parallelism.
inline CountChunk count_family(const SignatureFamily& fam, bool parity_pruning = true,
                               int jobs = 1) {
  std::uint64_t n = fam.size();
  if (jobs <= 1 || n < 2) return count_chunk(fam, 0, n, parity_pruning);
  std::uint64_t workers = std::min<std::uint64_t>(jobs, n);
  std::vector<std::future<CountChunk>> futures;
  for (std::uint64_t w = 0; w < workers; ++w) {
    std::uint64_t lo = n / workers * w + std::min<std::uint64_t>(w, n % workers);
    std::uint64_t hi = lo + n / workers + (w < n % workers ? 1 : 0);
    futures.push_back(std::async(std::launch::async, [&fam, lo, hi, parity_pruning] {
      return count_chunk(fam, lo, hi, parity_pruning);
    }));
  }
  CountChunk out;
  for (auto& f : futures) out += f.get();
  return out;
}

/// Exact class ratio by enumerating all 2^m signatures.
inline ClassRatioReport class_ratio_full(const SignedGraph& g, int edge_cap = 20,
                                         bool parity_pruning = true, int jobs = 1) {
  if (g.m() > edge_cap)
    throw std::invalid_argument("class_ratio_full: edge count exceeds the enumeration cap");
  SignatureFamily fam = full_signature_family(g);
  CountChunk c = count_family(fam, parity_pruning, jobs);
  ClassRatioReport rep;
  rep.total = c.total;
  rep.delta_colorable = c.delta;
  rep.strategy = "full";
  rep.reduce();
  return rep;
}

/// Exact class ratio over one representative per switching class.
inline ClassRatioReport class_ratio_cosets(const SignedGraph& g, int cotree_cap = 17,
                                           bool parity_pruning = true, int jobs = 1) {
  SignatureFamily fam = coset_signature_family(g);
  if (static_cast<int>(fam.free_edges.size()) > cotree_cap)
    throw std::invalid_argument("class_ratio_cosets: cycle rank exceeds the enumeration cap");
  CountChunk c = count_family(fam, parity_pruning, jobs);
  ClassRatioReport rep;
  rep.total = c.total;
  rep.delta_colorable = c.delta;
  rep.strategy = "cosets";
  rep.reduce();
  return rep;
}

/// Class ratio of C_r box C_s over product-induced signatures: the factor
/// balance pattern decides the class, so the four patterns are classified
/// once each and weighted by their signature counts.
inline ClassRatioReport class_ratio_product_induced(int r, int s) {
  if (r < 3 || s < 3)
    throw std::invalid_argument("class_ratio_product_induced: cycles need length 3");
  if (r + s > 62)
    throw std::invalid_argument("class_ratio_product_induced: factor signature space too large");
  auto representative = [](int len, bool balanced) {
    std::vector<int> sig(len, 1);
    if (!balanced) sig[0] = -1;
    return sig;
  };
  ClassRatioReport rep;
  rep.strategy = "product-induced";
  rep.total = 1ll << (r + s);
  long long per_pattern = 1ll << (r + s - 2);  // balanced = half of each factor's signatures
  for (bool b1 : {true, false}) {
    for (bool b2 : {true, false}) {
      TheoremOutcome out =
          classify_cycle_product(r, representative(r, b1), s, representative(s, b2));
      bool is_delta = out.claim == TheoremOutcome::Claim::kDelta;
      std::string name = std::string(b1 ? "balanced" : "unbalanced") + "*" +
                         (b2 ? "balanced" : "unbalanced");
      rep.breakdown.push_back({name, is_delta ? per_pattern : 0});
      if (is_delta) rep.delta_colorable += per_pattern;
    }
  }
  rep.reduce();
  return rep;
}

// ---------------------------------------------------------------------------
// Conjecture probes
// ---------------------------------------------------------------------------

struct ProbeReport {
  bool ok = false;
  long long checked = 0;
  std::string counterexample;  // signature of the first failure, empty if none
};

namespace detail {

inline std::string describe_signature(const SignedGraph& g) {
  std::string s = "signs=[";
  for (int ei = 0; ei < g.m(); ++ei) {
    if (ei) s += ",";
    s += g.edge(ei).sign > 0 ? "+" : "-";
  }
  return s + "]";
}

}  // namespace detail

/// Every signed complete graph on n vertices should use exactly n-1 colors;
/// checked over one representative per switching class.
inline ProbeReport probe_complete_conjecture(int n, int guard = 5) {
  if (n < 2 || n > guard) throw std::invalid_argument("probe_complete_conjecture: size guard");
  SignedGraph kn = make_complete(n, std::vector<int>(n * (n - 1) / 2, 1));
  SignatureFamily fam = coset_signature_family(kn);
  ProbeReport rep;
  rep.ok = true;
  for (std::uint64_t idx = 0; idx < fam.size(); ++idx) {
    SignedGraph s = fam.instantiate(idx);
    ++rep.checked;
    if (!decide_k_colorable(s, n - 1).has_value()) {
      rep.ok = false;
      rep.counterexample = detail::describe_signature(s);
      return rep;
    }
  }
  return rep;
}

/// Two identical cliques joined by one edge; vertex 0 of each copy carries
/// the join. Copy i of K_n occupies vertices i*n..i*n+n-1.
inline SignedGraph joined_cliques(int n, const std::vector<int>& clique_signs1,
                                  const std::vector<int>& clique_signs2, int join_sign) {
  SignedGraph k1 = make_complete(n, clique_signs1);
  SignedGraph k2 = make_complete(n, clique_signs2);
  std::vector<Edge> es = k1.edges();
  for (const Edge& e : k2.edges()) es.push_back({e.u + n, e.v + n, e.sign});
  es.push_back({0, n, join_sign});
  return SignedGraph(2 * n, std::move(es));
}

/// The joined-cliques graph should use exactly n colors; checked over one
/// representative per switching class.
inline ProbeReport probe_joined_cliques_conjecture(int n, int guard = 4) {
  if (n < 2 || n > guard)
    throw std::invalid_argument("probe_joined_cliques_conjecture: size guard");
  std::vector<int> plus(n * (n - 1) / 2, 1);
  SignedGraph base = joined_cliques(n, plus, plus, 1);
  SignatureFamily fam = coset_signature_family(base);
  ProbeReport rep;
  rep.ok = true;
  for (std::uint64_t idx = 0; idx < fam.size(); ++idx) {
    SignedGraph s = fam.instantiate(idx);
    ++rep.checked;
    if (!decide_k_colorable(s, n).has_value()) {
      rep.ok = false;
      rep.counterexample = detail::describe_signature(s);
      return rep;
    }
  }
  return rep;
}

/// Constructive n-coloring for consistent signatures (both cliques signed
/// identically): color one clique optimally with n colors, mirror it onto the
/// other copy with the sign flip the join edge dictates, and give the join
/// edge the color missing at both join vertices.
inline IncidenceColoring joined_cliques_mirrored_coloring(int n,
                                                          const std::vector<int>& clique_signs,
                                                          int join_sign) {
  SignedGraph kn = make_complete(n, clique_signs);
  auto cprime = decide_k_colorable(kn, n);
  if (!cprime) throw std::logic_error("joined_cliques_mirrored_coloring: clique coloring missing");
  // the one palette value absent at vertex 0
  std::set<int> at0;
  for (auto [w, ei] : kn.adjacent(0)) {
    (void)w;
    at0.insert(color_at(kn, *cprime, {0, ei}));
  }
  int alpha = 0;
  for (int v : color_set(n).members)
    if (!at0.count(v)) alpha = v;

  int eps = -join_sign;  // mirrored copy sign so the join edge closes
  SignedGraph joined = joined_cliques(n, clique_signs, clique_signs, join_sign);
  IncidenceColoring out;
  out.k = n;
  out.values.assign(joined.m(), {0, 0});
  for (int ei = 0; ei < kn.m(); ++ei) {
    const Edge& e = kn.edge(ei);
    out.values[joined.edge_index(e.u, e.v)] = cprime->values[ei];
    out.values[joined.edge_index(e.u + n, e.v + n)] = {eps * cprime->values[ei][0],
                                                       eps * cprime->values[ei][1]};
  }
  out.values[joined.edge_index(0, n)] = {alpha, eps * alpha};
  require_valid(joined, out, "joined_cliques_mirrored_coloring");
  return out;
}

}  // namespace sigraph
