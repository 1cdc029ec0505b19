#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "extremal/clique.hpp"
#include "extremal/graph.hpp"
#include "extremal/rational.hpp"

namespace extremal::weighting {

struct WeightAssignment {
  std::vector<std::pair<int, int>> edges;  // lexicographic, = E(g) exactly
  std::vector<Rational> weights;           // parallel to edges, each in [0,1]
  Rational total;                          // sum of weights
};

// Standard clique edge-weighting: r = order of the largest clique containing
// the edge, weight = r/(2(r-1)). Triangle-free edges get 1, K3-only edges
// 3/4, and so on down toward 1/2. Empty graph gives an empty assignment.
WeightAssignment standard_weighting(const Graph& g, const SearchOptions& opt = {});

// Total of the standard weighting without materializing the per-edge table;
// the scans and the exhaustive bound verification use this.
Rational standard_total(const Graph& g);

struct QuarterBoundReport {
  Rational total;
  Rational bound;  // n^2 / 4
  bool holds;      // total <= bound, exact comparison
};
QuarterBoundReport verify_quarter_bound(const Graph& g);

// Three-level rule for graphs with no K5: edge in some K4 -> 2/3, edge in a
// triangle but no K4 -> 4/5, otherwise 1.
WeightAssignment chubby_weighting_k5free(const Graph& g, const SearchOptions& opt = {});
Rational chubby_total_k5free(const Graph& g);

struct TriangleCover {
  std::vector<std::pair<int, int>> cover;  // edge subset meeting every triangle
  int size = 0;                            // = tau_Delta(g), minimal
  long long triangle_count = 0;
};
// Exact minimum triangle edge cover by branch and bound over the edges of an
// uncovered triangle, edges ordered by triangle participation. The returned
// cover is re-checked against every triangle before returning.
TriangleCover min_triangle_edge_cover(const Graph& g, const SearchOptions& opt = {});

struct HeavyFreeOptimum {
  Rational value;             // e(g) - (1-a) * tau_Delta(g)
  WeightAssignment witness;   // a on a minimum cover, 1 elsewhere
  int cover_size = 0;
};
// Maximum total weight over assignments where no triangle has all three
// edges above a, for a fixed K4-free g. An optimal assignment takes values
// in {a, 1} with the a-edges forming a minimum triangle edge cover.
// pre: clique_number(g) <= 3, a in [0,1].
HeavyFreeOptimum heavy_free_optimum(const Graph& g, const Rational& a,
                                    const SearchOptions& opt = {});

struct ScanRecord {
  int n = 0;
  Rational a;             // threshold (heavy-free scans only)
  Rational max_value;
  std::string witness_graph6;
  std::string method;     // "labeled", "canonical" or "heuristic"
  bool exhaustive = false;
};

// Max of heavy_free_optimum over all K4-free graphs on n vertices.
// Exhaustive over labeled graphs for n <= 7, over canonical representatives
// at n = 8, heuristic lower bound beyond (flagged).
ScanRecord extremal_heavy_free_scan(int n, const Rational& a, unsigned workers = 1,
                                    std::uint64_t seed = 0);

// Max chubby total over all K5-free graphs on n vertices; same regimes.
ScanRecord extremal_chubby_scan(int n, unsigned workers = 1, std::uint64_t seed = 0);

nlohmann::json scan_record_json(const ScanRecord& rec);

nlohmann::json weight_assignment_json(const WeightAssignment& w);

}  // namespace extremal::weighting
