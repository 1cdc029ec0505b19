#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "extremal/graph.hpp"
#include "extremal/rational.hpp"

namespace extremal::regularity {

// ---------------------------------------------------------------------------
// Partitions. A partition is a vector of pairwise-disjoint nonempty vertex
// sets covering the host graph; part order is significant everywhere below.

// Throws PreconditionError naming the first violated property.
void check_partition(const Graph& g, const std::vector<VertexSet>& parts);

// Largest and smallest part sizes differ by at most one.
bool is_equipartition(const std::vector<VertexSet>& parts);

// Deterministic shuffle-and-deal. Always an equipartition; requires
// 1 <= m <= n.
std::vector<VertexSet> random_equipartition(const Graph& g, int m,
                                            std::uint64_t seed);

// JSON form is a per-vertex part index array of length n with every index in
// [0, m) present at least once.
std::vector<VertexSet> partition_from_json(const Graph& g,
                                           const nlohmann::json& j);
nlohmann::json partition_json(const Graph& g,
                              const std::vector<VertexSet>& parts);

// ---------------------------------------------------------------------------
// Pair regularity. (A, B) with density d is eps-regular when every A' in A,
// B' in B with |A'| >= eps|A|, |B'| >= eps|B| has |d(A', B') - d| <= eps.
// All density comparisons are exact rational arithmetic.

enum class CertMode { exhaustive, sampled };

struct CertifyOptions {
  CertMode mode = CertMode::exhaustive;
  long long samples = 10000;  // sampled mode only
  std::uint64_t seed = 0;     // sampled mode only
  unsigned workers = 1;
};

struct PairCertificate {
  // Exhaustive mode: exact verdict. Sampled mode: "no violation among the
  // draws", which is evidence, never proof; `exact` records which.
  bool regular = false;
  bool exact = false;
  Rational density;  // d(A, B)
  // First violating subset pair in enumeration (or draw) order, if any.
  std::optional<std::pair<VertexSet, VertexSet>> violation;
  long long checked = 0;  // candidate subset pairs examined
};

// Exhaustive mode enumerates every A' and, per size, only the extreme B'
// candidates (vertices of B sorted by degree into A'); the extremes bound all
// other same-size choices, so the verdict covers every subset pair. Refused
// with BudgetError when either side exceeds 14 vertices. Sampled mode draws
// random subset pairs, half at the threshold sizes and half at uniform sizes.
// Requires 0 < eps, disjoint nonempty sides.
PairCertificate check_pair_regular(const Graph& g, VertexSet a, VertexSet b,
                                   const Rational& eps,
                                   const CertifyOptions& opt = {});

// ---------------------------------------------------------------------------
// Slicing. Splitting each side of an (eps, gamma)-regular pair into pieces
// holding at least an alpha fraction keeps the pieces regular with the
// parameters below.

struct SlicedParams {
  Rational eps_prime;         // max(eps / alpha, 2 eps)
  Rational gamma_minus_eps;   // density floor gamma - eps
};

// Requires 0 < eps < alpha <= 1, eps < gamma, eps < 1/2.
SlicedParams slicing_params(const Rational& eps, const Rational& gamma,
                            const Rational& alpha);

// ---------------------------------------------------------------------------
// Cluster graph: one vertex per part, pairwise densities and regularity
// flags, and the derived skeleton whose edges are the (eps, gamma)-regular
// pairs (regular and density >= gamma).

struct ClusterGraph {
  int m = 0;
  Rational epsilon;
  Rational gamma;
  std::vector<std::vector<Rational>> density;  // symmetric, zero diagonal
  std::vector<std::vector<bool>> regular;      // symmetric, false diagonal

  Graph skeleton() const;
};

// Assemble directly from pairwise data: listed pairs get the given density
// and the regular flag; unlisted pairs are irregular with density zero.
ClusterGraph cluster_from_pairs(
    int m, const std::vector<std::tuple<int, int, Rational>>& pairs,
    const Rational& eps, const Rational& gamma);

// Measure every pair of the partition and certify with check_pair_regular.
// Exhaustive certification inherits its size cap; pass sampled options for
// larger parts (the flags are then evidence, not proof).
ClusterGraph build_cluster_graph(const Graph& g,
                                 const std::vector<VertexSet>& parts,
                                 const Rational& eps, const Rational& gamma,
                                 const CertifyOptions& opt = {});

nlohmann::json cluster_graph_json(const ClusterGraph& r);
ClusterGraph cluster_graph_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Dense patterns in a cluster graph. Both scans enumerate index tuples in
// ascending lexicographic order over skeleton cliques of the given order.
// A heavy triple needs EVERY pair dense (>= threshold + gamma); a chubby
// clique needs SOME pair dense. Every heavy triple is chubby at order 3.
// gamma here is the slack added to the threshold, passed separately so a
// caller can scan with a different margin than the one the flags were
// certified with.

std::vector<VertexSet> detect_heavy_triangles(const ClusterGraph& r,
                                              const Rational& threshold,
                                              const Rational& gamma);

// clique_order must be 3 or 4.
std::vector<VertexSet> detect_chubby(const ClusterGraph& r,
                                     const Rational& threshold,
                                     const Rational& gamma, int clique_order);

// ---------------------------------------------------------------------------
// Edge accounting. Edges outside the skeleton pairs (inside parts, across
// irregular pairs, across sparse pairs) are the residual; the bound chain
// caps them by eps n^2 + (gamma/4) n^2 + n^2 / (2m), and that in turn by
// (gamma/3) n^2 exactly when eps + gamma/4 + 1/(2m) <= gamma/3.

struct ResidualBound {
  Rational exact_sum;      // eps m^2 (n/m)^2 + (gamma/2)(n/m)^2 C(m,2) + C(n/m,2) m
  Rational relaxed_bound;  // eps n^2 + (gamma/4) n^2 + n^2 / (2m)
  Rational gamma_third;    // (gamma/3) n^2
  bool chain_ok = false;      // exact_sum <= relaxed_bound
  bool gamma_third_ok = false;  // relaxed_bound <= gamma_third
};

// Requires n >= m >= 1, eps >= 0, gamma >= 0. The part size n/m is used as an
// exact rational, matching an equipartition that divides evenly.
ResidualBound residual_edge_bound(long long n, int m, const Rational& eps,
                                  const Rational& gamma);

struct EdgeSplit {
  long long cluster_edges = 0;   // across skeleton pairs
  long long residual_edges = 0;  // everything else
};

// Exact split; cluster_edges + residual_edges == e(g). parts must partition g
// and match r.m.
EdgeSplit edge_decomposition(const Graph& g,
                             const std::vector<VertexSet>& parts,
                             const ClusterGraph& r);

// ---------------------------------------------------------------------------
// Clique lifting: expand a k-clique of the skeleton into a host clique by
// picking p mutually adjacent vertices per part, each pick restricted to the
// common neighborhood of everything chosen so far. Bounded backtracking;
// absence is "not found within budget", never a refutation.

struct LiftOptions {
  long long node_budget = 1000;  // candidate p-cliques examined across all parts
};

std::optional<VertexSet> lift_clique(const Graph& g,
                                     const std::vector<VertexSet>& parts,
                                     const ClusterGraph& r,
                                     VertexSet cluster_clique, int p,
                                     const LiftOptions& opt = {});

// ---------------------------------------------------------------------------
// Crossing-degree cleanup: repeatedly delete the vertex with the smallest
// crossing degree into some other part while any vertex sees less than
// floor_fraction of that part. floor_met records whether the floor holds at
// exit (false means a part emptied first).

struct PruneReport {
  std::vector<VertexSet> parts;
  std::vector<int> deleted;  // in deletion order
  bool floor_met = false;
};

PruneReport prune_low_crossing_degree(const Graph& g,
                                      std::vector<VertexSet> parts,
                                      const Rational& floor_fraction);

// ---------------------------------------------------------------------------
// Parameter hierarchy 0 < 1/n0 <= 1/n << delta < 1/m' << eps << gamma << 1,
// where x << y is read as x <= y / gap. Every link is evaluated; ok is their
// conjunction.

struct ParamHierarchy {
  long long n0 = 0;
  long long n = 0;
  long long m_prime = 0;
  Rational delta;
  Rational epsilon;
  Rational gamma;
  Rational gap = 16;
};

struct HierarchyLink {
  std::string name;
  bool ok = false;
};

struct HierarchyReport {
  bool ok = false;
  std::vector<HierarchyLink> links;
};

HierarchyReport validate_hierarchy(const ParamHierarchy& h);

nlohmann::json hierarchy_report_json(const HierarchyReport& r);
nlohmann::json pair_certificate_json(const PairCertificate& c);
nlohmann::json residual_bound_json(const ResidualBound& b);
nlohmann::json edge_split_json(const EdgeSplit& s);
nlohmann::json prune_report_json(const PruneReport& r);

}  // namespace extremal::regularity
