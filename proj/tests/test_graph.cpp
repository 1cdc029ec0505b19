#include "doctest.h"

#include "extremal/graph.hpp"
#include "extremal/rational.hpp"
#include "extremal/rng.hpp"

#include "oracles.hpp"

using namespace extremal;

TEST_CASE("vertex set basics") {
  auto s = VertexSet::of({0, 3, 5});
  CHECK(s.count() == 3);
  CHECK(s.contains(3));
  CHECK(!s.contains(1));
  CHECK(s.lowest() == 0);
  CHECK(s.highest() == 5);
  CHECK((s.without(3).count()) == 2);
  CHECK(VertexSet::range(6).count() == 6);
  CHECK(VertexSet::range(64).count() == 64);
  CHECK((s - VertexSet::of({3})) == VertexSet::of({0, 5}));
}

TEST_CASE("graph construction and invariants") {
  Graph c5 = Graph::cycle(5);
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.adjacent(0, 1));
  CHECK(c5.adjacent(4, 0));
  CHECK(!c5.adjacent(0, 2));
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  Graph k4 = Graph::complete(4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.complement().edge_count() == 0);

  // complement is an involution
  CHECK(c5.complement().complement() == c5);

  CHECK_THROWS_AS(Graph(65), PreconditionError);
  CHECK_THROWS_AS(Graph(-1), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
}

TEST_CASE("complete multipartite and turan shapes") {
  Graph t63 = Graph::complete_multipartite({2, 2, 2});
  CHECK(t63.vertex_count() == 6);
  CHECK(t63.edge_count() == 12);
  for (int v = 0; v < 6; ++v) CHECK(t63.degree(v) == 4);

  Graph k33 = Graph::complete_multipartite({3, 3});
  CHECK(k33.edge_count() == 9);

  Graph t73 = Graph::complete_multipartite({3, 2, 2});
  CHECK(t73.vertex_count() == 7);
  CHECK(t73.edge_count() == 16);
}

TEST_CASE("edges listed lexicographically") {
  Graph p3 = Graph::path(3);
  auto es = p3.edges();
  REQUIRE(es.size() == 2);
  CHECK(es[0] == std::pair<int, int>{0, 1});
  CHECK(es[1] == std::pair<int, int>{1, 2});
}

TEST_CASE("induced subgraph relabels densely") {
  Graph c5 = Graph::cycle(5);
  Graph ind = c5.induced(VertexSet::of({0, 1, 3}));
  CHECK(ind.vertex_count() == 3);
  CHECK(ind.edge_count() == 1);  // only 0-1 survives
  CHECK(ind.adjacent(0, 1));
}

TEST_CASE("join basics and laws on small graphs") {
  Graph j = Graph::join(Graph::cycle(5), Graph::cycle(5));
  CHECK(j.vertex_count() == 10);
  CHECK(j.edge_count() == 5 + 5 + 25);

  // join(empty(a), empty(b)) == K_{a,b}
  CHECK(Graph::join(Graph(2), Graph(3)) == Graph::complete_multipartite({2, 3}));

  // Edge count law over a batch of random pairs; alpha law is covered in the
  // clique tests where alpha is available.
  CounterRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int a = 1 + static_cast<int>(rng.below(5));
    int b = 1 + static_cast<int>(rng.below(5));
    Graph ga = oracle::random_graph(a, rng.unit(), rng);
    Graph gb = oracle::random_graph(b, rng.unit(), rng);
    Graph gj = Graph::join(ga, gb);
    CHECK(gj.edge_count() ==
          ga.edge_count() + gb.edge_count() + static_cast<long long>(a) * b);
    // adjacency blocks preserved
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < a; ++v)
        if (u != v) CHECK(gj.adjacent(u, v) == ga.adjacent(u, v));
    for (int u = 0; u < b; ++u)
      for (int v = 0; v < b; ++v)
        if (u != v) CHECK(gj.adjacent(a + u, a + v) == gb.adjacent(u, v));
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v) CHECK(gj.adjacent(u, a + v));
  }
}

TEST_CASE("blowup") {
  // Blowing up an edge gives complete bipartite
  Graph k2 = Graph::complete(2);
  CHECK(k2.blowup({3, 4}) == Graph::complete_multipartite({3, 4}));
  // C5 blowup keeps classes independent
  Graph b = Graph::cycle(5).blowup({2, 2, 2, 2, 2});
  CHECK(b.vertex_count() == 10);
  CHECK(b.edge_count() == 5 * 4);
  CHECK(!b.adjacent(0, 1));
  CHECK(b.adjacent(0, 2));
}

TEST_CASE("common neighborhood") {
  Graph t63 = Graph::complete_multipartite({2, 2, 2});
  // edge {0,2}: common neighbors are the last part plus the complements in
  // the first two parts... in K_{2,2,2} everything not in their own parts.
  auto cn = common_neighborhood(t63, VertexSet::of({0, 2}), VertexSet::of({4, 5}));
  CHECK(cn == VertexSet::of({4, 5}));

  // empty a returns b unchanged
  CHECK(common_neighborhood(t63, VertexSet{}, VertexSet::of({1, 3})) == VertexSet::of({1, 3}));

  CHECK_THROWS_AS(common_neighborhood(t63, VertexSet::of({0}), VertexSet::of({0, 1})),
                  PreconditionError);

  // C5: common neighborhood of the endpoints of a path of length 2
  Graph c5 = Graph::cycle(5);
  auto mid = common_neighborhood(c5, VertexSet::of({0, 2}), VertexSet::of({1, 3, 4}));
  CHECK(mid == VertexSet::of({1}));
}

TEST_CASE("min crossing degree") {
  Graph t73 = Graph::complete_multipartite({3, 2, 2});
  std::vector<VertexSet> parts = {VertexSet::of({0, 1, 2}), VertexSet::of({3, 4}),
                                  VertexSet::of({5, 6})};
  CHECK(min_crossing_degree(t73, parts) == 2);

  // one missing cross edge drops the minimum
  Graph g = Graph::complete_multipartite({2, 2});
  std::vector<std::pair<int, int>> es;
  for (auto e : g.edges())
    if (e != std::pair<int, int>{0, 2}) es.push_back(e);
  Graph g2(4, std::span<const std::pair<int, int>>(es));
  std::vector<VertexSet> parts2 = {VertexSet::of({0, 1}), VertexSet::of({2, 3})};
  CHECK(min_crossing_degree(g2, parts2) == 1);

  std::vector<VertexSet> overlapping = {VertexSet::of({0, 1}), VertexSet::of({1, 2})};
  CHECK_THROWS_AS(min_crossing_degree(g2, overlapping), PreconditionError);
  std::vector<VertexSet> one = {VertexSet::of({0, 1})};
  CHECK_THROWS_AS(min_crossing_degree(g2, one), PreconditionError);
}

TEST_CASE("pair density") {
  Graph c5 = Graph::cycle(5);
  auto st = pair_density(c5, VertexSet::of({0, 1}), VertexSet::of({2, 3}));
  CHECK(st.cross_edges == 1);
  CHECK(st.density == ratio(1, 4));

  Graph k33 = Graph::complete_multipartite({3, 3});
  auto full = pair_density(k33, VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5}));
  CHECK(full.density == 1);

  CHECK_THROWS_AS(pair_density(c5, VertexSet::of({0}), VertexSet{}), PreconditionError);
  CHECK_THROWS_AS(pair_density(c5, VertexSet::of({0, 1}), VertexSet::of({1})),
                  PreconditionError);
}

TEST_CASE("adjacency json round trip") {
  CounterRng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng.below(20)), rng.unit(), rng);
    Graph back = Graph::from_adjacency_json(g.adjacency_json());
    CHECK(back == g);
  }
  auto bad = nlohmann::json{{"n", 2}, {"adj", {{1}, nlohmann::json::array()}}};
  CHECK_THROWS_AS(Graph::from_adjacency_json(bad), PreconditionError);
}

TEST_CASE("rational helpers") {
  CHECK(fraction_string(ratio(4, 6)) == "2/3");
  CHECK(fraction_string(ratio(8, 4)) == "2");
  CHECK(parse_rational("2/3") == ratio(2, 3));
  CHECK(parse_rational("0.35") == ratio(7, 20));
  CHECK(parse_rational("-1.5") == ratio(-3, 2));
  CHECK(parse_rational("7") == ratio(7));
  CHECK(!parse_rational("x/3").has_value());
  CHECK(!parse_rational("1/0").has_value());
  CHECK(rational_from_json(rational_json(ratio(-22, 7))) == ratio(-22, 7));
  CHECK(rational_floor(ratio(7, 2)) == 3);
  CHECK(rational_floor(ratio(-7, 2)) == -4);
  CHECK(rational_floor(ratio(-8, 2)) == -4);
}

TEST_CASE("counter rng is replayable and forkable") {
  CounterRng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  CounterRng c(42);
  auto f1 = c.fork(7), f2 = c.fork(7), f3 = c.fork(8);
  CHECK(f1.next() == f2.next());
  CHECK(f1.next() != f3.next());
  // bounded draws stay in range
  CounterRng d(1);
  for (int i = 0; i < 1000; ++i) CHECK(d.below(13) < 13);
}
