#pragma once

#include <string>

#include "extremal/graph.hpp"

namespace extremal {

// Canonical form: the relabeling of g whose upper-triangle bitstring (read
// column by column, the graph6 bit order) is lexicographically maximal.
// Two graphs are isomorphic iff their canonical forms are equal. Exact
// branch-and-bound over permutations with prefix pruning and twin
// elimination; intended for the enumeration sizes (n <= ~16), where it is
// fast regardless of symmetry.
Graph canonical_graph(const Graph& g);

// Compact key: byte n, then the canonical bitstring packed 8 bits per byte.
// Equal keys <=> isomorphic graphs.
std::string canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace extremal
