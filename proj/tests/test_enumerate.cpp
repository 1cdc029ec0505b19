#include "doctest.h"

#include "extremal/clique.hpp"
#include "extremal/enumerate.hpp"

using namespace extremal;

TEST_CASE("unrestricted counts match the known isomorphism-class sequence") {
  // 1, 2, 4, 11, 34, 156, 1044 classes on 1..7 vertices
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n)
    CHECK(enumerate_nonisomorphic(n).size() == expected[n - 1]);
}

TEST_CASE("triangle-free counts match the known sequence") {
  // 1, 2, 3, 7, 14, 38, 107, 410, 1897 triangle-free classes on 1..9 vertices
  const std::size_t expected[] = {1, 2, 3, 7, 14, 38, 107, 410, 1897};
  EnumerateOptions opt;
  opt.forbid_clique = 3;
  for (int n = 1; n <= 9; ++n) {
    auto reps = enumerate_nonisomorphic(n, opt);
    CHECK(reps.size() == expected[n - 1]);
    for (const Graph& g : reps) CHECK(!has_clique(g, 3));
  }
}

TEST_CASE("constraints are enforced and results deterministic across workers") {
  EnumerateOptions opt;
  opt.forbid_clique = 4;
  opt.alpha_max = 3;
  auto reps1 = enumerate_nonisomorphic(7, opt);
  for (const Graph& g : reps1) {
    CHECK(!has_clique(g, 4));
    CHECK(independence_number(g) <= 3);
  }
  EnumerateOptions opt2 = opt;
  opt2.workers = 3;
  auto reps2 = enumerate_nonisomorphic(7, opt2);
  REQUIRE(reps1.size() == reps2.size());
  for (std::size_t i = 0; i < reps1.size(); ++i) CHECK(reps1[i] == reps2[i]);
}

TEST_CASE("degree options prune soundly") {
  // 2-regular graphs on 7 vertices: C7 and C3+C4, so exactly 2 classes
  EnumerateOptions opt;
  opt.max_degree = 2;
  opt.min_degree_final = 2;
  opt.target_n = 7;
  auto reps = enumerate_nonisomorphic(7, opt);
  CHECK(reps.size() == 2);
  for (const Graph& g : reps)
    for (int v = 0; v < 7; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("level budget refusal") {
  EnumerateOptions opt;
  opt.max_reps_per_level = 100;
  CHECK_THROWS_AS(enumerate_nonisomorphic(7, opt), BudgetError);
}
