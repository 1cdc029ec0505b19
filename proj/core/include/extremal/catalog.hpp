#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "extremal/rational.hpp"

namespace extremal::rt {

// Reference data: limiting edge densities of K_s-free graphs under an
// independence-number budget. An entry with density c and status `exact`
// says the maximum edge count of an n-vertex K_s-free graph with
// independence number in the tagged function class is c*n^2 + o(n^2);
// status `upper` records only the one-sided bound. Entries flagged
// `conditional` assume the polynomial-separation conjecture for
// off-diagonal Ramsey numbers (R(l-1, m) <= R(l, m)/m^c for some c(l) > 0
// and all large m; known for l = 3 and 4).
//
// f_class vocabulary:
//   "n/2" .. "n/12"         linear budgets at the Turan threshold
//   "o(n)"                  every sublinear budget
//   "sqrt(n*log(n))", "2*sqrt(n*log(n))", "o(sqrt(n*log(n)))"
//                           square-root-log scale; logs are base 2
//   "Q(t,n)", "o(Q(t,n))"   Q(t,n) = least independence number over
//                           K_t-free n-vertex graphs (inverse Ramsey)
//   "g(n)", "g(n)/sqrt(n)", "Q(t,g(n))"
//                           g(n) = n*e^{-w(n)*sqrt(log n)} with w(n)
//                           growing arbitrarily slowly; sits between
//                           n^{1-eps} and n for every eps > 0. These tags
//                           are documentation only: no finite n evaluates
//                           w(n), so nothing in this library computes them.
struct DensityCatalogEntry {
  int s = 0;              // forbidden clique order
  std::string f_class;    // independence budget, tags above
  Rational density;       // value (exact) or bound (upper)
  bool is_exact = false;  // false: upper bound only
  bool conditional = false;
  std::string source;     // literature tag; "new" marks the latest additions
};

// All entries for one clique order in table order; empty outside 3..13.
const std::vector<DensityCatalogEntry>& catalog_entries(int s);

// Clique orders the catalog covers: 3..13.
std::vector<int> catalog_orders();

// Entries matching (s, f_class). Matching normalizes the square-root-log
// scale inside o(.): Q(3,n) is within constant factors of sqrt(n*log(n)),
// and constant factors vanish inside o(.), so "o(Q(3,n))",
// "o(sqrt(n*log(n)))" and "o(2*sqrt(n*log(n)))" name the same class.
// Outside o(.) the constant matters and tags match verbatim. Unknown s or
// tag gives an empty list.
std::vector<DensityCatalogEntry> catalog_lookup(int s, const std::string& f_class);

// Clique bound satisfied by the cluster graph of a K_t-free host whose
// independence number sits at the inverse-Ramsey scale the catalog's
// starred rows use: the cluster graph is K_4-free for 9 <= t <= 12 and
// K_5-free for t = 13, improving to K_4-free under the separation
// conjecture for l = 5. Returns the forbidden clique order (4 or 5);
// requires 9 <= t <= 13.
int cluster_clique_bound(int t, bool assume_separation_l5);

nlohmann::json catalog_entry_json(const DensityCatalogEntry& e);

}  // namespace extremal::rt
