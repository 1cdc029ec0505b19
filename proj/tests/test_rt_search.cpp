#include "doctest.h"

#include "extremal/clique.hpp"
#include "extremal/constructions.hpp"
#include "extremal/graph6.hpp"
#include "extremal/rt.hpp"

#include "oracles.hpp"

using namespace extremal;
using namespace extremal::rt;

TEST_CASE("rt_exact pinned small values") {
  auto r532 = rt_exact({5, 3, 2});
  CHECK(r532.exact());
  CHECK(r532.lower == 5);
  CHECK(oracle::isomorphic_bruteforce(from_graph6(*r532.witness_graph6), Graph::cycle(5)));

  auto r633 = rt_exact({6, 3, 3});
  CHECK(r633.lower == 9);
  CHECK(oracle::isomorphic_bruteforce(from_graph6(*r633.witness_graph6),
                                      Graph::complete_multipartite({3, 3})));

  auto r642 = rt_exact({6, 4, 2});
  CHECK(r642.lower == 12);
  CHECK(oracle::isomorphic_bruteforce(from_graph6(*r642.witness_graph6),
                                      Graph::complete_multipartite({2, 2, 2})));

  // R(3,3) = 6: no triangle-free graph on 6 vertices keeps alpha <= 2
  auto r632 = rt_exact({6, 3, 2});
  CHECK(!r632.feasible());
  CHECK(!r632.witness_graph6.has_value());

  CHECK_THROWS_AS(rt_exact({11, 3, 3}), BudgetError);
  CHECK_THROWS_AS(rt_exact({5, 2, 2}), PreconditionError);
  CHECK_THROWS_AS(rt_exact({5, 3, 0}), PreconditionError);
}

TEST_CASE("rt_exact matches the labeled brute force on the full small grid") {
  for (int n = 0; n <= 6; ++n) {
    auto table = oracle::rt_profile_table(n);
    for (int s = 3; s <= 6; ++s)
      for (int b = 1; b <= 6; ++b) {
        auto rec = rt_exact({n, s, b});
        long long naive = oracle::rt_from_profile(table, s, b);
        CHECK(rec.lower == naive);
        if (rec.feasible()) {
          Graph w = from_graph6(*rec.witness_graph6);
          CHECK(!has_clique(w, s));
          CHECK(independence_number(w) <= b);
          CHECK(w.edge_count() == rec.lower);
        }
      }
  }
}

TEST_CASE("rt monotonicity in s and alpha_budget") {
  for (int n = 4; n <= 7; ++n)
    for (int s = 3; s <= 5; ++s)
      for (int b = 1; b <= 5; ++b) {
        auto base = rt_exact({n, s, b});
        CHECK(rt_exact({n, s + 1, b}).lower >= base.lower);
        CHECK(rt_exact({n, s, b + 1}).lower >= base.lower);
      }
}

TEST_CASE("rt_exact witness stable across worker counts") {
  for (unsigned workers : {1u, 2u, 4u}) {
    RTSearchOptions opt;
    opt.workers = workers;
    auto rec = rt_exact({7, 4, 3}, opt);
    auto ref = rt_exact({7, 4, 3});
    CHECK(rec.lower == ref.lower);
    CHECK(rec.witness_graph6 == ref.witness_graph6);
  }
}

TEST_CASE("rt_upper_trivial") {
  CHECK(rt_upper_trivial({6, 4, 6}) == 12);  // Turan term wins
  CHECK(rt_upper_trivial({5, 3, 2}) == 5);   // degree term: floor(5*(R(2,3)-1)/2) = 5 < e(T(5,2)) = 6
  // upper dominates exact across the grid
  for (int n = 1; n <= 6; ++n)
    for (int s = 3; s <= 5; ++s)
      for (int b = 1; b <= 4; ++b) {
        auto rec = rt_exact({n, s, b});
        if (rec.feasible()) CHECK(rt_upper_trivial({n, s, b}) >= rec.lower);
      }
  // huge budgets stay finite (saturated ramsey dp)
  CHECK(rt_upper_trivial({64, 10, 64}) <= Graph::complete(64).edge_count());
}

TEST_CASE("rt_heuristic_lower") {
  // alpha budget >= ceil(n/(s-1)) makes the constraint vacuous: Turan value
  for (auto [n, s] : {std::pair{6, 4}, {10, 5}, {12, 4}}) {
    auto rec = rt_heuristic_lower({n, s, n}, 1);
    CHECK(rec.lower == constructions::turan_graph(n, s - 1).edge_count());
    CHECK(rec.method == "heuristic");
  }

  // the join-of-pentagons regime: at least the construction value
  auto rec = rt_heuristic_lower({10, 9, 2}, 3);
  CHECK(rec.lower >= 35);
  CHECK(rec.lower <= rec.upper);
  Graph w = from_graph6(*rec.witness_graph6);
  CHECK(!has_clique(w, 9));
  CHECK(independence_number(w) <= 2);

  // lower <= upper on a sweep; witnesses always verify
  for (int n : {5, 9, 13})
    for (int s : {3, 4, 5})
      for (int b : {2, 3}) {
        auto r = rt_heuristic_lower({n, s, b}, 5, 60);
        CHECK(r.lower <= r.upper);
        if (r.feasible()) {
          Graph g = from_graph6(*r.witness_graph6);
          CHECK(!has_clique(g, s));
          CHECK(independence_number(g) <= b);
          CHECK(g.edge_count() == r.lower);
        }
      }

  // more iterations never lose ground
  auto short_run = rt_heuristic_lower({12, 4, 3}, 9, 10);
  auto long_run = rt_heuristic_lower({12, 4, 3}, 9, 300);
  CHECK(long_run.lower >= short_run.lower);

  // heuristic matching exact on solved instances flags exactness via equality
  auto hx = rt_heuristic_lower({6, 4, 6}, 0);
  CHECK(hx.lower == 12);
  CHECK(hx.upper == 12);
  CHECK(hx.exact());
}

TEST_CASE("rt record json round trip") {
  auto rec = rt_exact({6, 4, 2});
  auto j = rt_record_json(rec);
  CHECK(j.at("value") == 12);
  CHECK(j.at("feasible") == true);
  auto back = rt_record_from_json(j);
  CHECK(back.lower == rec.lower);
  CHECK(back.upper == rec.upper);
  CHECK(back.witness_graph6 == rec.witness_graph6);
  CHECK(back.method == "exact");

  auto inf = rt_exact({6, 3, 2});
  auto ji = rt_record_json(inf);
  CHECK(ji.at("feasible") == false);
  CHECK(!ji.contains("value"));
  auto backi = rt_record_from_json(ji);
  CHECK(!backi.feasible());

  auto heur = rt_heuristic_lower({9, 4, 3}, 2, 40);
  auto jh = rt_record_json(heur);
  if (!heur.exact()) {
    CHECK(jh.at("lower") == heur.lower);
    CHECK(jh.at("upper") == heur.upper);
  }
  auto backh = rt_record_from_json(jh);
  CHECK(backh.lower == heur.lower);
  CHECK(backh.method == "heuristic");
}
