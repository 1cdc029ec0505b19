#include "doctest.h"

#include "extremal/clique.hpp"
#include "extremal/constructions.hpp"
#include "extremal/graph6.hpp"

#include "oracles.hpp"

using namespace extremal;
using namespace extremal::constructions;

TEST_CASE("turan graphs") {
  Graph t73 = turan_graph(7, 3);
  CHECK(t73.edge_count() == 16);  // parts (3,2,2): 3*2 + 3*2 + 2*2
  CHECK(!has_clique(t73, 4));
  CHECK(clique_number(t73) == 3);

  CHECK(turan_graph(5, 1).edge_count() == 0);

  Graph t63 = turan_graph(6, 3);
  CHECK(t63.edge_count() == 12);
  CHECK(independence_number(t63) == 2);

  CHECK(turan_graph(4, 4) == Graph::complete(4));
  CHECK_THROWS_AS(turan_graph(3, 4), PreconditionError);
  CHECK_THROWS_AS(turan_graph(3, 0), PreconditionError);

  // edge count matches the closed form over a grid
  for (int n = 1; n <= 20; ++n)
    for (int r = 1; r <= n; ++r) {
      long long e = 0;
      std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
      for (int i = 0; i < n % r; ++i) ++sizes[static_cast<std::size_t>(i)];
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
          e += static_cast<long long>(sizes[static_cast<std::size_t>(i)]) *
               sizes[static_cast<std::size_t>(j)];
      CHECK(turan_graph(n, r).edge_count() == e);
    }
}

TEST_CASE("random cliquefree generator is certified and deterministic") {
  // (5,3) is pinned to the pentagon
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    auto [g, rep] = random_cliquefree_small_alpha(5, 3, seed);
    CHECK(g == Graph::cycle(5));
    CHECK(rep.alpha == 2);
    CHECK(rep.clique_free_ok);
  }

  CHECK_THROWS_AS(random_cliquefree_small_alpha(10, 2, 0), PreconditionError);

  for (int t : {3, 4}) {
    for (int n : {0, 1, 8, 20, 40}) {
      auto [g, rep] = random_cliquefree_small_alpha(n, t, 7);
      CHECK(g.vertex_count() == n);
      CHECK(!has_clique(g, t));
      CHECK(rep.clique_free_ok);
      CHECK(rep.alpha == independence_number(g));
      // determinism: same seed, same graph
      auto [g2, rep2] = random_cliquefree_small_alpha(n, t, 7);
      CHECK(to_graph6(g) == to_graph6(g2));
    }
  }

  // the golden seed-pinned run: K4-free on 50 vertices, alpha well below 50
  auto [g50, rep50] = random_cliquefree_small_alpha(50, 4, 7);
  CHECK(!has_clique(g50, 4));
  CHECK(rep50.omega == 3);
  CHECK(rep50.alpha == 10);
  CHECK(rep50.edges == 470);
}

TEST_CASE("two part join") {
  // n=10, p=2: halves come out as pentagons, so this is join(C5, C5)
  auto [g, rep] = two_part_join(10, 2, 42);
  CHECK(g.vertex_count() == 10);
  CHECK(rep.omega == 4);
  CHECK(rep.alpha == 2);
  CHECK(rep.edges == 35);
  CHECK(rep.clique_free_ok);  // omega = 4 < 5
  CHECK(rep.alpha_ok);
  CHECK(rep.target_edges == 25);

  CHECK_THROWS_AS(two_part_join(10, 1, 0), PreconditionError);

  // explicit-parts overload with the same halves
  auto [g2, rep2] = two_part_join(Graph::cycle(5), Graph::cycle(5), 2);
  CHECK(rep2.omega == 4);
  CHECK(rep2.alpha == 2);
  CHECK(rep2.edges == 35);
  CHECK(!has_clique(g2, 9));
  CHECK(!has_clique(g2, 5));

  // join alone supplies at least floor(n/2)*ceil(n/2) >= floor(n^2/4) edges
  for (int n : {2, 5, 9, 16, 23}) {
    auto [gj, repj] = two_part_join(n, 2, 5);
    CHECK(repj.edges >= (n / 2) * ((n + 1) / 2));
    CHECK(repj.clique_free_ok);
    CHECK(repj.alpha_ok);
  }
}

TEST_CASE("three part join") {
  auto [g, rep] = three_part_join(Graph::cycle(5), Graph::cycle(5), Graph::cycle(5), 5);
  CHECK(g.vertex_count() == 15);
  CHECK(rep.omega == 6);
  CHECK(rep.alpha == 2);
  CHECK(rep.edges == 90);  // 15 inner + 75 cross
  CHECK(rep.target_edges == 75);
  CHECK(rep.clique_free_ok);
  CHECK(rep.alpha_ok);

  CHECK_THROWS_AS(three_part_join(12, 4, 0), PreconditionError);

  // empty parts: the edge count is exactly the cross total
  auto [ge, repe] = three_part_join(Graph(4), Graph(3), Graph(3), 5);
  CHECK(repe.edges == 4 * 3 + 4 * 3 + 3 * 3);
  CHECK(repe.edges == repe.target_edges);

  // equal parts means cross edges match the Turan count
  auto [gt, rept] = three_part_join(Graph(4), Graph(4), Graph(4), 5);
  CHECK(rept.target_edges == turan_graph(12, 3).edge_count());

  // generator form: certified K_{3t+1}-free
  auto [gg, repg] = three_part_join(21, 5, 3);
  CHECK(gg.vertex_count() == 21);
  CHECK(repg.clique_free_ok);
  CHECK(repg.omega <= 15);
  CHECK(repg.edges >= repg.target_edges);
}

TEST_CASE("conjectured stand-ins are certified cliquefree") {
  for (int n : {10, 20, 33, 40}) {
    auto [g9, rep9] = conjectured_k9(n, 0);
    CHECK(g9.vertex_count() == n);
    CHECK(rep9.omega < 9);
    CHECK(rep9.clique_free_ok);
    CHECK(!has_clique(g9, 9));
    // first part has ceil(3n/5) vertices; cross edges alone reach that product
    int first = (3 * n + 4) / 5;
    CHECK(rep9.edges >= static_cast<long long>(first) * (n - first));
    CHECK(rep9.target_edges == ratio(3, 10) * n * n);

    auto [g12, rep12] = conjectured_k12(n, 0);
    CHECK(g12.vertex_count() == n);
    CHECK(rep12.omega < 12);
    CHECK(rep12.clique_free_ok);
    CHECK(rep12.target_edges == ratio(4, 13) * n * n);
  }

  // at n=40 the dense layering beats the aspirational targets
  auto [g9, rep9] = conjectured_k9(40, 0);
  CHECK(Rational(rep9.edges) >= rep9.target_edges);
  auto [g12, rep12] = conjectured_k12(40, 0);
  CHECK(Rational(rep12.edges) >= rep12.target_edges);
}

TEST_CASE("verify_construction recomputes honestly") {
  auto rep = verify_construction(turan_graph(6, 3), 4, 2);
  CHECK(rep.omega == 3);
  CHECK(rep.alpha == 2);
  CHECK(rep.edges == 12);
  CHECK(rep.clique_free_ok);
  CHECK(rep.alpha_ok);

  CHECK(!verify_construction(Graph::complete(5), 5, 10).clique_free_ok);

  auto repj = verify_construction(Graph::join(Graph::cycle(5), Graph::cycle(5)), 9, 2);
  CHECK(repj.clique_free_ok);
  CHECK(repj.alpha_ok);
  CHECK(repj.edges == 35);

  // spot-check against the subset oracles on random inputs
  CounterRng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(2 + static_cast<int>(rng.below(7)), rng.unit(), rng);
    auto r = verify_construction(g, 4, 3);
    CHECK(r.omega == oracle::clique_number_subsets(g));
    CHECK(r.alpha == oracle::independence_number_subsets(g));
  }
}

TEST_CASE("ratio parts use largest remainder") {
  CHECK(ratio_parts(10, {ratio(3, 5), ratio(2, 5)}) == std::vector<int>{6, 4});
  CHECK(ratio_parts(7, {ratio(3, 5), ratio(2, 5)}) == std::vector<int>{4, 3});
  CHECK(ratio_parts(11, {ratio(1, 3), ratio(1, 3), ratio(1, 3)}) ==
        std::vector<int>{4, 4, 3});
  CHECK(ratio_parts(1, {ratio(1, 2), ratio(1, 2)}) == std::vector<int>{1, 0});
  CHECK_THROWS_AS(ratio_parts(5, {ratio(1, 2), ratio(1, 3)}), PreconditionError);
  CHECK_THROWS_AS(ratio_parts(5, {ratio(3, 2), ratio(-1, 2)}), PreconditionError);
  // sizes always sum to n
  for (int n : {1, 5, 13, 26, 40})
    for (auto& rs : std::vector<std::vector<Rational>>{
             {ratio(8, 13), ratio(5, 13)}, {ratio(1, 7), ratio(2, 7), ratio(4, 7)}}) {
      auto parts = ratio_parts(n, rs);
      int sum = 0;
      for (int p : parts) sum += p;
      CHECK(sum == n);
    }
}

TEST_CASE("construction specs drive the generators") {
  nlohmann::json j{{"kind", "two_part_join"}, {"n", 10}, {"inner_forbidden", 3}, {"seed", 42}};
  auto spec = ConstructionSpec::from_json(j);
  auto [g, rep] = run_construction(spec);
  CHECK(rep.omega == 4);
  CHECK(rep.edges == 35);

  // identical spec + seed -> identical graph6
  auto [g2, rep2] = run_construction(spec);
  CHECK(to_graph6(g) == to_graph6(g2));

  nlohmann::json jt{{"kind", "turan"}, {"n", 12}, {"forbidden_clique", 4}};
  auto [gt, rept] = run_construction(ConstructionSpec::from_json(jt));
  CHECK(gt == turan_graph(12, 3));
  CHECK(rept.clique_free_ok);

  // inconsistent claim: two K3-free parts cannot promise K4-freeness
  nlohmann::json jbad{{"kind", "two_part_join"},
                      {"n", 10},
                      {"inner_forbidden", 3},
                      {"forbidden_clique", 4}};
  CHECK_THROWS_AS(run_construction(ConstructionSpec::from_json(jbad)), PreconditionError);

  nlohmann::json jratios{{"kind", "three_part_join"},
                         {"n", 15},
                         {"inner_forbidden", 6},
                         {"part_ratios", {"1/3", "1/3", "1/3"}},
                         {"seed", 1}};
  auto [gr, repr] = run_construction(ConstructionSpec::from_json(jratios));
  CHECK(gr.vertex_count() == 15);
  CHECK(repr.clique_free_ok);

  nlohmann::json junk{{"kind", "mystery"}, {"n", 5}};
  CHECK_THROWS_AS(run_construction(ConstructionSpec::from_json(junk)), PreconditionError);

  nlohmann::json jk9{{"kind", "conjectured_k9"}, {"n", 20}};
  auto [gk, repk] = run_construction(ConstructionSpec::from_json(jk9));
  CHECK(repk.omega < 9);
  auto jrep = construction_report_json(repk);
  CHECK(jrep.at("omega") == repk.omega);
  CHECK(jrep.at("clique_free_ok") == true);
  CHECK(jrep.at("target_edges").at("num") == "120");  // 3*400/10
}
