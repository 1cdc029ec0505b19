#pragma once

#include <optional>

#include "extremal/graph.hpp"

namespace extremal {

struct SearchOptions {
  // Orders above this are refused with a BudgetError naming the limit.
  // Configurable downward only; the representation caps it at 64.
  int exact_limit = kDefaultExactSearchLimit;
  // Worker threads for branch-level parallelism. Results (value and witness)
  // are identical for every worker count.
  unsigned workers = 1;
};

struct MaxCliqueResult {
  int size = 0;
  VertexSet witness;  // recomputed deterministically, independent of workers
};

// Branch-and-bound maximum clique with a greedy-coloring bound. Branching
// follows the color order seeded by descending degree, ties broken by lowest
// vertex index. The returned witness is always the first clique of maximum
// size in lexicographic search order, so identical inputs give identical
// witnesses no matter how the value search was scheduled.
MaxCliqueResult max_clique(const Graph& g, const SearchOptions& opt = {});
int clique_number(const Graph& g, const SearchOptions& opt = {});

MaxCliqueResult max_independent_set(const Graph& g, const SearchOptions& opt = {});
int independence_number(const Graph& g, const SearchOptions& opt = {});

// First k-clique in lexicographic search order, or absent if none exists.
// k >= 1. Complete (absence is proof), same limits as max_clique.
std::optional<VertexSet> find_clique(const Graph& g, int k, const SearchOptions& opt = {});
std::optional<VertexSet> find_independent_set(const Graph& g, int k,
                                              const SearchOptions& opt = {});

inline bool has_clique(const Graph& g, int k, const SearchOptions& opt = {}) {
  return find_clique(g, k, opt).has_value();
}

// Clique number of the subgraph induced by `sub`, computed in place on the
// bit rows (no relabeling). Allocation-free; scans lean on it.
int clique_number_within(const Graph& g, VertexSet sub);

}  // namespace extremal
