#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "extremal/graph.hpp"

namespace extremal::rt {

// Maximum edge count of an n-vertex K_s-free graph whose independence
// number stays within the budget.
struct RTQuery {
  int n = 0;
  int s = 0;            // forbidden clique order, >= 3
  int alpha_budget = 0; // >= 1
};

// A resolved query. lower == upper means the value is exact; lower == -1
// means no graph satisfies the constraints at this n (the maximum ranges
// over an empty set). The witness, when present, attains `lower` edges and
// satisfies both constraints.
struct RTRecord {
  RTQuery query;
  long long lower = -1;
  long long upper = -1;
  std::optional<std::string> witness_graph6;
  std::string method;  // "exact" | "heuristic"

  bool exact() const { return lower == upper; }
  bool feasible() const { return lower >= 0; }
};

struct RTSearchOptions {
  int exact_limit = 10;  // rt_exact refuses above this order
  unsigned workers = 1;
  long long max_reps_per_level = 200000;
};

// Exhaustive optimum over canonical representatives of K_s-free graphs with
// bounded independence number. The witness is the canonically smallest
// maximizer, identical across worker counts.
RTRecord rt_exact(const RTQuery& q, const RTSearchOptions& opt = {});

// Feasible lower bound: construction seeds (Turan graphs, joins of
// triangle-free pieces) improved by an edge-add / vertex-rewire local
// search. The value never decreases as iterations grow. upper is filled
// from rt_upper_trivial; equality therefore certifies exactness.
RTRecord rt_heuristic_lower(const RTQuery& q, std::uint64_t seed, int iterations = 200);

// min( e(T(n, s-1)),  floor(n * (R_ub(s-1, alpha_budget+1) - 1) / 2) ).
// The first term is Turan's theorem; the second caps every degree: a
// neighborhood in such a graph is K_{s-1}-free with the same independence
// budget, so it has fewer than R(s-1, alpha_budget+1) vertices.
long long rt_upper_trivial(const RTQuery& q);

nlohmann::json rt_record_json(const RTRecord& r);
RTRecord rt_record_from_json(const nlohmann::json& j);

}  // namespace extremal::rt
