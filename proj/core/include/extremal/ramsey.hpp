#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "extremal/graph.hpp"

namespace extremal::ramsey {

// One row of knowledge about R(t,m): exact when lower == upper, an honest
// interval otherwise. A witness, when present, lives on lower-1 vertices,
// is K_t-free and has independence number below m; it certifies the lower
// bound and is re-verified whenever a table is built or loaded.
struct RamseyEntry {
  int t = 0;
  int m = 0;
  int lower = 0;
  int upper = 0;
  std::optional<std::string> witness_graph6;

  bool exact() const { return lower == upper; }
  int value() const { return lower; }
};

class RamseyTable {
 public:
  // Rows R(t,1)=1, R(t,2)=t, R(2,m)=m are answered without storage.
  std::optional<RamseyEntry> lookup(int t, int m) const;

  // Insert re-verifies any witness (order, clique-freeness, independence).
  void insert(RamseyEntry entry);

  const std::map<std::pair<int, int>, RamseyEntry>& entries() const { return entries_; }

  nlohmann::json to_json() const;
  static RamseyTable from_json(const nlohmann::json& j);

  // R(3,3)=6, R(3,4)=9, R(3,5)=14 with their classical extremal witnesses
  // (pentagon, the 8-vertex circulant C8(1,4), the 13-vertex circulant
  // C13(1,5)); each witness is verified on construction. These three values
  // are independently reproduced by ramsey_exact in the test suite.
  static RamseyTable defaults();

 private:
  std::map<std::pair<int, int>, RamseyEntry> entries_;
};

// Upper bound by the classical sum recurrence R(t,m) <= R(t-1,m) + R(t,m-1),
// seeded with the table's rows (both orientations; exact values and interval
// uppers) and the trivial rows. Saturates at 10^18 so large arguments stay
// usable in min() expressions instead of overflowing.
long long ramsey_upper_dp(const RamseyTable& table, int t, int m);

// Exact Ramsey number by breadth-first isomorph-free growth of K_t-free
// graphs with independence number below m. The search is exact when the
// growth dies out within the vertex budget: the last nonempty level gives
// the witness, the first empty level the value. Budget exhaustion (either
// vertices or representatives per level) yields an interval entry instead.
struct RamseySearchOptions {
  int vertex_budget = 20;
  unsigned workers = 1;
  long long max_reps_per_level = 200000;
};
RamseyEntry ramsey_exact(int t, int m, const RamseySearchOptions& opt = {});

// The unique m with R(t,m) <= n < R(t,m+1). Interval entries participate
// when they decide the comparison; otherwise the gap is reported by name.
int inverse_ramsey_q(int t, int n, const RamseyTable& table);

// ceil(2k^2 / log2 k): the order at which any graph contains a triangle or
// an independent set of size k.
long long shearer_threshold(long long k);

// Closed-form growth envelopes for Q(t,n), constants set to 1 and logs base
// 2 throughout. lower/upper evaluate c * n^{n_exp} * (log2 n)^{log_exp}.
struct QEnvelope {
  int t = 0;
  double c_lower = 1, n_exp_lower = 0, log_exp_lower = 0;
  double c_upper = 1, n_exp_upper = 0, log_exp_upper = 0;

  double lower(double n) const;
  double upper(double n) const;
};

// t = 4: n^{1/3}(log n)^{2/3} up to n^{2/5}(log n)^{4/5};
// t = 5: n^{1/4}(log n)^{3/4} up to n^{1/3}(log n)^{8/9}.
QEnvelope q_envelope(int t);

// Q(3,n) bracket: (1/sqrt 2) sqrt(n log2 n) to sqrt(2) sqrt(n log2 n);
// the ratio upper/lower is exactly 2.
std::pair<double, double> q3_envelope(double n);

nlohmann::json ramsey_entry_json(const RamseyEntry& e);

}  // namespace extremal::ramsey
