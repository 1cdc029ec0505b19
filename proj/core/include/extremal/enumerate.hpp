#pragma once

#include <cstdint>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// Isomorph-free breadth-first generation of hereditary graph classes: every
// graph on k+1 vertices in the class has a vertex whose deletion lands in the
// class on k vertices, so extending each k-vertex representative by one new
// vertex with every possible neighborhood reaches every class member;
// canonical-form deduplication keeps one representative per isomorphism
// type. Output order is sorted by canonical key, hence deterministic and
// independent of the worker count.
struct EnumerateOptions {
  // Graphs must be K_s-free (clique number < forbid_clique). 0 disables.
  int forbid_clique = 0;
  // Independence number must be <= alpha_max. 0 disables.
  int alpha_max = 0;
  // Degree cap, sound at every level since degrees only grow. -1 disables.
  int max_degree = -1;
  // With target_n set, prune partial graphs that cannot reach the final
  // minimum degree: deg(v) + (target_n - level) < min_degree_final. Both -1
  // disable.
  int min_degree_final = -1;
  int target_n = -1;
  unsigned workers = 1;
  // Refuse (BudgetError) if a level would exceed this many representatives.
  std::uint64_t max_reps_per_level = 200000;
};

// One generation step: all representatives on (k+1) vertices whose members
// restrict to some graph in `level` (the k-vertex representatives).
std::vector<Graph> extend_representatives(const std::vector<Graph>& level,
                                          const EnumerateOptions& opt = {});

// All representatives on exactly n vertices satisfying the constraints.
std::vector<Graph> enumerate_nonisomorphic(int n, const EnumerateOptions& opt = {});

}  // namespace extremal
