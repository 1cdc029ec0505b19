#include "doctest.h"

#include "extremal/clique.hpp"
#include "extremal/enumerate.hpp"
#include "extremal/rng.hpp"

#include "oracles.hpp"

using namespace extremal;

TEST_CASE("clique number on known graphs") {
  CHECK(clique_number(Graph(0)) == 0);
  CHECK(clique_number(Graph(3)) == 1);
  CHECK(clique_number(Graph::cycle(5)) == 2);
  CHECK(clique_number(Graph::complete(7)) == 7);
  CHECK(clique_number(Graph::complete_multipartite({3, 3, 3})) == 3);
  CHECK(clique_number(Graph::join(Graph::cycle(5), Graph::cycle(5))) == 4);
}

TEST_CASE("independence number on known graphs") {
  CHECK(independence_number(Graph::cycle(5)) == 2);
  CHECK(independence_number(Graph::complete_multipartite({3, 3})) == 3);
  CHECK(independence_number(Graph::complete(6)) == 1);
  CHECK(independence_number(Graph(7)) == 7);
  CHECK(independence_number(Graph::join(Graph::cycle(5), Graph::cycle(5))) == 2);
}

TEST_CASE("witness is a clique of the reported size") {
  CounterRng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng.below(12));
    Graph g = oracle::random_graph(n, rng.unit(), rng);
    auto res = max_clique(g);
    CHECK(res.size == oracle::clique_number_subsets(g));
    CHECK(res.witness.count() == res.size);
    auto vs = res.witness.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) CHECK(g.adjacent(vs[i], vs[j]));
  }
}

TEST_CASE("value and witness independent of worker count") {
  CounterRng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 5 + static_cast<int>(rng.below(14));
    Graph g = oracle::random_graph(n, 0.3 + 0.5 * rng.unit(), rng);
    SearchOptions w1, w2, w4;
    w1.workers = 1;
    w2.workers = 2;
    w4.workers = 4;
    auto r1 = max_clique(g, w1), r2 = max_clique(g, w2), r4 = max_clique(g, w4);
    CHECK(r1.size == r2.size);
    CHECK(r1.size == r4.size);
    CHECK(r1.witness == r2.witness);
    CHECK(r1.witness == r4.witness);
  }
}

TEST_CASE("alpha equals clique number of the complement on all small graphs") {
  // All isomorphism classes up to 7 vertices (covering every labeled graph;
  // both quantities are isomorphism invariants).
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      CHECK(independence_number(g) == clique_number(g.complement()));
    }
  }
}

TEST_CASE("find_clique is complete and lexicographically first") {
  Graph t63 = Graph::complete_multipartite({2, 2, 2});
  auto tri = find_clique(t63, 3);
  REQUIRE(tri.has_value());
  CHECK(*tri == VertexSet::of({0, 2, 4}));
  CHECK(!find_clique(t63, 4).has_value());

  // join of three C5s contains a 6-clique, one edge per C5
  std::vector<Graph> parts{Graph::cycle(5), Graph::cycle(5), Graph::cycle(5)};
  Graph j3 = Graph::join(std::span<const Graph>(parts));
  auto six = find_clique(j3, 6);
  REQUIRE(six.has_value());
  auto vs = six->to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t k = i + 1; k < vs.size(); ++k) CHECK(j3.adjacent(vs[i], vs[k]));

  // completeness: find <=> subset oracle agrees, over random graphs and all k
  CounterRng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng.below(9));
    Graph g = oracle::random_graph(n, rng.unit(), rng);
    int omega = oracle::clique_number_subsets(g);
    for (int k = 1; k <= n; ++k) {
      auto found = find_clique(g, k);
      CHECK(found.has_value() == (k <= omega));
      if (found) {
        CHECK(found->count() == k);
        auto fv = found->to_vector();
        for (std::size_t i = 0; i < fv.size(); ++i)
          for (std::size_t j = i + 1; j < fv.size(); ++j) CHECK(g.adjacent(fv[i], fv[j]));
      }
    }
  }
}

TEST_CASE("search limit refusals") {
  SearchOptions tight;
  tight.exact_limit = 10;
  Graph g(11);
  CHECK_THROWS_AS(clique_number(g, tight), BudgetError);
  CHECK_THROWS_AS(independence_number(g, tight), BudgetError);
  CHECK_THROWS_AS(find_clique(g, 2, tight), BudgetError);
  CHECK_THROWS_AS(find_clique(g, 0), PreconditionError);
  // limit message names the limit
  try {
    clique_number(g, tight);
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("10") != std::string::npos);
  }
}
