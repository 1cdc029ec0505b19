#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "extremal/graph.hpp"
#include "extremal/rational.hpp"

namespace extremal::constructions {

// Certificate attached to every generated graph: the claimed clique-freeness
// and independence budget are recomputed from scratch, never trusted.
struct ConstructionReport {
  int omega = 0;
  int alpha = 0;
  long long edges = 0;
  // Closed-form edge target of the construction (0 when verifying a bare
  // graph with no construction attached).
  Rational target_edges = 0;
  bool clique_free_ok = false;  // omega < forbidden clique order
  bool alpha_ok = false;        // alpha <= budget
};

// Recompute omega, alpha and the edge count of g, checking omega < s and
// alpha <= alpha_budget. Exact search; graphs are capped at 64 vertices so
// no sampled mode is needed.
ConstructionReport verify_construction(const Graph& g, int s, int alpha_budget);

// Complete r-partite graph with part sizes as equal as possible.
Graph turan_graph(int n, int r);

// K_t-free graph on n vertices aiming for small independence number:
// binomial random graph at a density that keeps the expected number of
// K_t's small, then one vertex deleted per surviving K_t, oversampled so
// the survivor count reaches n. The achieved alpha is measured and
// reported, never assumed. (5, 3, seed) returns the pentagon for any seed.
std::pair<Graph, ConstructionReport> random_cliquefree_small_alpha(int n, int t,
                                                                   std::uint64_t seed);

// Two K_{p+1}-free halves of sizes ceil(n/2), floor(n/2), joined
// completely. The result is K_{2p+1}-free with at least floor(n/2)*ceil(n/2)
// edges from the join alone.
std::pair<Graph, ConstructionReport> two_part_join(int n, int p, std::uint64_t seed);

// Same join, but with caller-supplied halves (each must be K_{p+1}-free for
// the certificate to come out clean; the report tells the truth either way).
std::pair<Graph, ConstructionReport> two_part_join(const Graph& left, const Graph& right,
                                                   int p);

// Three K_{t+1}-free parts of near-equal sizes, complete between parts:
// K_{3t+1}-free with at least sum_{i<j} n_i n_j edges.
std::pair<Graph, ConstructionReport> three_part_join(int n, int t, std::uint64_t seed);
std::pair<Graph, ConstructionReport> three_part_join(const Graph& a, const Graph& b,
                                                     const Graph& c, int t);

// Conjecture-flavored stand-ins. Parts sized by largest-remainder rounding
// of the stated ratios; inner parts are joins of triangle-free blowups, so
// the clique numbers compose by join additivity and stay strictly below the
// forbidden order. Reports record achieved alpha and edge counts against
// the aspirational closed forms (3n^2/10, 4n^2/13); nothing conjectural is
// asserted as true.
//  k9:  parts (3n/5, 2n/5), inner K6-free and K4-free, result K9-free.
//  k12: parts (8n/13, 5n/13), inner K7-free and K5-free, result K12-free.
std::pair<Graph, ConstructionReport> conjectured_k9(int n, std::uint64_t seed);
std::pair<Graph, ConstructionReport> conjectured_k12(int n, std::uint64_t seed);

// Declarative form used by the CLI: kind + parameters as JSON.
struct ConstructionSpec {
  std::string kind;  // turan | two_part_join | three_part_join | conjectured_k9 | conjectured_k12
  int n = 0;
  int forbidden_clique = 0;            // claimed K_s-freeness of the result
  std::vector<Rational> part_ratios;   // optional; must be positive, sum 1
  int inner_forbidden = 0;             // per-part clique bound (join kinds)
  std::uint64_t seed = 0;

  static ConstructionSpec from_json(const nlohmann::json& j);
};

// Dispatch a spec to the matching generator, validating consistency between
// the claimed forbidden clique and what the kind can deliver.
std::pair<Graph, ConstructionReport> run_construction(const ConstructionSpec& spec);

// Part sizes from exact ratios by largest remainder, deterministic.
std::vector<int> ratio_parts(int n, const std::vector<Rational>& ratios);

nlohmann::json construction_report_json(const ConstructionReport& r);

}  // namespace extremal::constructions
