#include "doctest.h"

#include "extremal/clique.hpp"
#include "extremal/enumerate.hpp"
#include "extremal/graph6.hpp"
#include "extremal/weighting.hpp"

#include "oracles.hpp"

using namespace extremal;
using namespace extremal::weighting;

namespace {

// Brute-force heavy-free optimum: max total over {a,1}-valued assignments
// where every triangle has at least one edge at a.
Rational heavy_free_brute(const Graph& g, const Rational& a) {
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  int n = g.vertex_count();
  std::vector<std::array<int, 3>> tris;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (g.adjacent(x, y) && g.adjacent(x, z) && g.adjacent(y, z)) tris.push_back({x, y, z});
  auto eidx = [&](int u, int v) {
    for (int i = 0; i < m; ++i)
      if (edges[static_cast<std::size_t>(i)] == std::pair{std::min(u, v), std::max(u, v)})
        return i;
    return -1;
  };
  Rational best = -1;
  for (std::uint64_t s = 0; s < (1ull << m); ++s) {
    // bit set = edge gets a, clear = edge gets 1
    bool ok = true;
    for (auto& t : tris) {
      bool low = ((s >> eidx(t[0], t[1])) & 1) || ((s >> eidx(t[0], t[2])) & 1) ||
                 ((s >> eidx(t[1], t[2])) & 1);
      if (!low) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Rational total = Rational(m - __builtin_popcountll(s)) + a * __builtin_popcountll(s);
    if (total > best) best = total;
  }
  return best;
}

Graph turan(int n, int r) {
  std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
  for (int i = 0; i < n % r; ++i) ++sizes[static_cast<std::size_t>(i)];
  return Graph::complete_multipartite(sizes);
}

}  // namespace

TEST_CASE("standard weighting on known graphs") {
  // K5: all edges 5/8, total 25/4
  auto k5 = standard_weighting(Graph::complete(5));
  CHECK(k5.edges.size() == 10);
  for (const auto& w : k5.weights) CHECK(w == ratio(5, 8));
  CHECK(k5.total == ratio(25, 4));

  // T(6,3): all edges 3/4, total 9 = 36/4
  auto t63 = standard_weighting(Graph::complete_multipartite({2, 2, 2}));
  for (const auto& w : t63.weights) CHECK(w == ratio(3, 4));
  CHECK(t63.total == 9);

  // P3: both edges 1
  auto p3 = standard_weighting(Graph::path(3));
  CHECK(p3.total == 2);
  for (const auto& w : p3.weights) CHECK(w == 1);

  // empty graph: empty assignment
  auto e = standard_weighting(Graph(4));
  CHECK(e.edges.empty());
  CHECK(e.total == 0);
}

TEST_CASE("standard weighting agrees with the subset-scan oracle") {
  CounterRng rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng.below(8));
    Graph g = oracle::random_graph(n, rng.unit(), rng);
    CHECK(standard_total(g) == oracle::standard_total_subsets(g));
    CHECK(standard_weighting(g).total == oracle::standard_total_subsets(g));
  }
}

TEST_CASE("standard weights lie in [1/2,1], 1 iff triangle-free edge") {
  CounterRng rng(405);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.below(9));
    Graph g = oracle::random_graph(n, rng.unit(), rng);
    auto w = standard_weighting(g);
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
      CHECK(w.weights[i] >= ratio(1, 2));
      CHECK(w.weights[i] <= 1);
      auto [u, v] = w.edges[i];
      bool in_triangle = (g.row_bits(u) & g.row_bits(v)) != 0;
      CHECK((w.weights[i] == 1) == !in_triangle);
    }
  }
}

TEST_CASE("quarter bound reports") {
  // T(12,4) hits the bound exactly
  auto r = verify_quarter_bound(turan(12, 4));
  CHECK(r.total == 36);
  CHECK(r.bound == 36);
  CHECK(r.holds);

  // K3 = T(3,3): equality 9/4
  auto k3 = verify_quarter_bound(Graph::complete(3));
  CHECK(k3.total == ratio(9, 4));
  CHECK(k3.holds);

  // equality family r | n (spot checks here; the full r <= 10, n <= 60 family
  // is acceptance criterion 1)
  for (auto [n, rr] : {std::pair{10, 2}, {12, 3}, {14, 7}, {9, 3}}) {
    auto rep = verify_quarter_bound(turan(n, rr));
    CHECK(rep.total == rep.bound);
  }

  // non-divisible case stays strictly below
  auto t73 = verify_quarter_bound(turan(7, 3));
  CHECK(t73.total < t73.bound);
}

TEST_CASE("quarter bound holds on random graphs up to n=50") {
  // 50k trials by default (~13 s); EXTREMAL_DEEP_TESTS=1 runs the full 1e6.
  int trials = 50000;
  if (const char* deep = std::getenv("EXTREMAL_DEEP_TESTS"); deep && deep[0] == '1')
    trials = 1000000;
  CounterRng rng(777);
  int violations = 0;
  for (int i = 0; i < trials; ++i) {
    int n = 1 + static_cast<int>(rng.below(50));
    double p = rng.unit();
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.unit() < p) es.emplace_back(u, v);
    Graph g(n, std::span<const std::pair<int, int>>(es));
    if (!verify_quarter_bound(g).holds) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("chubby weighting cases and precondition") {
  // T(9,3): 27 edges at 4/5, total 108/5
  auto t93 = chubby_weighting_k5free(turan(9, 3));
  CHECK(t93.edges.size() == 27);
  for (const auto& w : t93.weights) CHECK(w == ratio(4, 5));
  CHECK(t93.total == ratio(108, 5));
  CHECK(chubby_total_k5free(turan(9, 3)) == ratio(108, 5));

  // K4: all 6 edges 2/3
  auto k4 = chubby_weighting_k5free(Graph::complete(4));
  for (const auto& w : k4.weights) CHECK(w == ratio(2, 3));
  CHECK(k4.total == 4);

  // C5: triangle-free, all weights 1
  auto c5 = chubby_weighting_k5free(Graph::cycle(5));
  for (const auto& w : c5.weights) CHECK(w == 1);
  CHECK(c5.total == 5);

  CHECK_THROWS_AS(chubby_weighting_k5free(Graph::complete(5)), PreconditionError);
  CHECK_THROWS_AS(chubby_total_k5free(Graph::complete(6)), PreconditionError);
}

TEST_CASE("chubby total = standard total + 1/20 per triangle-only edge") {
  CounterRng rng(406);
  int done = 0;
  while (done < 150) {
    int n = 2 + static_cast<int>(rng.below(8));
    Graph g = oracle::random_graph(n, rng.unit(), rng);
    if (has_clique(g, 5)) continue;
    ++done;
    long long tri_only = 0;
    for (auto [u, v] : g.edges()) {
      std::uint64_t common = g.row_bits(u) & g.row_bits(v);
      if (!common) continue;
      bool in_k4 = false;
      for (std::uint64_t b = common; b && !in_k4; b &= b - 1) {
        int w = __builtin_ctzll(b);
        if (g.row_bits(w) & (b & (b - 1))) in_k4 = true;
      }
      if (!in_k4) ++tri_only;
    }
    CHECK(chubby_total_k5free(g) == standard_total(g) + ratio(1, 20) * tri_only);
  }
}

TEST_CASE("minimum triangle edge cover") {
  CHECK(min_triangle_edge_cover(Graph::complete(3)).size == 1);
  CHECK(min_triangle_edge_cover(Graph::cycle(6)).size == 0);
  // K4: a perfect matching meets all 4 triangles
  auto k4 = min_triangle_edge_cover(Graph::complete(4));
  CHECK(k4.size == 2);
  CHECK(k4.triangle_count == 4);

  // against the subset oracle on random graphs
  CounterRng rng(407);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng.below(4));
    Graph g = oracle::random_graph(n, rng.unit(), rng);
    if (g.edge_count() > 12) continue;
    auto cover = min_triangle_edge_cover(g);
    CHECK(cover.size == oracle::min_triangle_cover_subsets(g));
    // the cover is made of edges and meets every triangle (certificate is
    // internal, re-check here independently)
    for (auto [u, v] : cover.cover) CHECK(g.adjacent(u, v));
  }
}

TEST_CASE("heavy-free optimum examples") {
  // K3 at a=2/3: 3 - 1/3 = 8/3
  auto k3 = heavy_free_optimum(Graph::complete(3), ratio(2, 3));
  CHECK(k3.value == ratio(8, 3));
  CHECK(k3.cover_size == 1);

  // C5: no triangles, value 5 at any threshold
  CHECK(heavy_free_optimum(Graph::cycle(5), ratio(2, 3)).value == 5);
  CHECK(heavy_free_optimum(Graph::cycle(5), ratio(1, 7)).value == 5);

  // T(6,3) at 3/4: 12 - tau/4 with tau from the cover oracle
  Graph t63 = Graph::complete_multipartite({2, 2, 2});
  int tau = oracle::min_triangle_cover_subsets(t63);
  auto opt = heavy_free_optimum(t63, ratio(3, 4));
  CHECK(opt.value == Rational(12) - ratio(1, 4) * tau);
  CHECK(opt.cover_size == tau);

  CHECK_THROWS_AS(heavy_free_optimum(Graph::complete(4), ratio(2, 3)), PreconditionError);
  CHECK_THROWS_AS(heavy_free_optimum(Graph::cycle(5), ratio(3, 2)), PreconditionError);
}

TEST_CASE("heavy-free optimum equals the {a,1} brute force on all small K4-free graphs") {
  // All isomorphism classes with n <= 5 (value is an isomorphism invariant;
  // the labeled-exhaustive version is acceptance criterion 3).
  for (const Rational& a : {ratio(2, 3), ratio(3, 4)}) {
    for (int n = 1; n <= 5; ++n) {
      EnumerateOptions opt;
      opt.forbid_clique = 4;
      for (const Graph& g : enumerate_nonisomorphic(n, opt)) {
        CHECK(heavy_free_optimum(g, a).value == heavy_free_brute(g, a));
      }
    }
  }
}

TEST_CASE("heavy-free scan small cases") {
  // n=3, a=2/3: K3 wins with 8/3
  auto rec3 = extremal_heavy_free_scan(3, ratio(2, 3));
  CHECK(rec3.max_value == ratio(8, 3));
  CHECK(rec3.exhaustive);
  CHECK(rec3.method == "labeled");

  // n=4, a=2/3: compare against a direct loop over the 11 classes
  auto rec4 = extremal_heavy_free_scan(4, ratio(2, 3));
  Rational best = -1;
  EnumerateOptions eopt;
  eopt.forbid_clique = 4;
  for (const Graph& g : enumerate_nonisomorphic(4, eopt)) {
    Rational v = heavy_free_brute(g, ratio(2, 3));
    if (v > best) best = v;
  }
  CHECK(rec4.max_value == best);

  // witness decodes and is K4-free with the claimed value
  Graph w = from_graph6(rec4.witness_graph6);
  CHECK(!has_clique(w, 4));
  CHECK(heavy_free_optimum(w, ratio(2, 3)).value == rec4.max_value);

  // scan is deterministic across worker counts
  auto rec4b = extremal_heavy_free_scan(4, ratio(2, 3), 3);
  CHECK(rec4b.max_value == rec4.max_value);
  CHECK(rec4b.witness_graph6 == rec4.witness_graph6);
}

TEST_CASE("chubby scan small cases") {
  // n=4: K4 gives 4, but 13/3... scan must find the true max; cross-check by brute force
  for (int n = 2; n <= 5; ++n) {
    auto rec = extremal_chubby_scan(n);
    CHECK(rec.exhaustive);
    // independent check: iterate all labeled graphs naively
    Rational best = -1;
    int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pv;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pv.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
      std::vector<std::pair<int, int>> es;
      for (std::uint64_t b = mask; b; b &= b - 1)
        es.push_back(pv[static_cast<std::size_t>(__builtin_ctzll(b))]);
      Graph g(n, std::span<const std::pair<int, int>>(es));
      if (oracle::clique_number_subsets(g) >= 5) continue;
      Rational t = chubby_total_k5free(g);
      if (t > best) best = t;
    }
    CHECK(rec.max_value == best);
    Graph w = from_graph6(rec.witness_graph6);
    CHECK(chubby_total_k5free(w) == rec.max_value);
  }
}

TEST_CASE("scan json shape") {
  auto rec = extremal_heavy_free_scan(3, ratio(2, 3));
  auto j = scan_record_json(rec);
  CHECK(j.at("n") == 3);
  CHECK(j.at("a_num") == "2");
  CHECK(j.at("a_den") == "3");
  CHECK(j.at("max_value_num") == "8");
  CHECK(j.at("max_value_den") == "3");
  CHECK(j.contains("witness_graph6"));
}
