#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "extremal/graph.hpp"
#include "extremal/rational.hpp"

namespace extremal::drc {

// Parameters of the dependent-random-choice refinement on a k-partite host
// with parts of size n. Random probe sets drawn from the first k-1 parts cut
// the last part down to a set S whose t-tuples all keep large common
// neighborhoods in every other part.
struct DRCParams {
  int k = 2;         // number of parts, >= 2
  long long n = 0;   // size of every part, >= 2
  Rational gamma;    // minimum cross-degree fraction, in (0,1)
  Rational c;        // size exponent knob, > 0; |S| floor is n^{1-c}/2
  int t = 2;         // tuple order the guarantee quantifies over, >= 2
};

// Throws PreconditionError on out-of-range fields.
void check_params(const DRCParams& p);

// Non-fatal hygiene flags: c below 4/log2(n) (the n^{+-c/2} factors stop
// meaning much), or tuple threshold gamma^a * n below 1 (every tuple passes
// vacuously). Empty vector = clean.
std::vector<std::string> drc_warnings(const DRCParams& p);

// Exponent of the per-tuple neighborhood guarantee: a = 2(k-1)(t+1)/c,
// exact. Tuples in S are promised common neighborhoods of size gamma^a * n.
Rational drc_exponent_a(const DRCParams& p);

struct SampleSize {
  double q_real = 0;  // -(c/(2(k-1))) * log_gamma(n), > 0
  long long q = 0;    // ceil(q_real), snapped down when q_real is integral
};
// Probe-set size. The expectation identities hold for q_real; sampling needs
// an integer, and rounding up only strengthens the common-neighborhood
// filter. q >= q_real up to the snap tolerance (1e-9 relative).
SampleSize drc_sample_size_q(const DRCParams& p);

struct DRCIdentityReport {
  double q_real = 0;
  double a = 0;  // double view of the exact exponent
  // n * gamma^{(k-1) q_real} = n^{1-c/2}, in logs.
  double sprime_log_lhs = 0, sprime_log_rhs = 0, sprime_rel_err = 0;
  // n^t * gamma^{a q_real} = n^{-1}, in logs.
  double bad_log_lhs = 0, bad_log_rhs = 0, bad_rel_err = 0;
  bool identities_ok = false;       // both rel errors <= 1e-9
  double expectation_lower = 0;     // n^{1-c/2} - n^{-1}, what E[|S'|-X] beats
  double expectation_bound = 0;     // n^{1-c/2} / 2
  double size_floor = 0;            // n^{1-c} / 2, the advertised |S|
  std::vector<std::string> warnings;
};
// Algebraic self-check of the two closed forms behind the expectation bound
// E[|S'|-X] >= n^{1-c/2} - n^{-1} >= n^{1-c/2}/2. Evaluated in the log
// domain with the un-rounded q_real.
DRCIdentityReport drc_expectation_identities(const DRCParams& p);

struct DRCOutcome {
  long long q = 0;             // probes drawn per part
  long long s_prime_size = 0;  // |S'|, common neighborhood of the probes
  long long bad_count = 0;     // X, tuples of S' below threshold (pre-deletion)
  long long s_size = 0;        // |S| after deleting one vertex per bad tuple
  std::vector<int> s_vertices; // S, ascending vertex ids
  // Smallest common-neighborhood size seen while verifying tuples of S;
  // -1 when |S| < t (nothing to check).
  long long min_common_neighborhood = -1;
  double tuple_threshold = 0;  // gamma^a * n
  bool guarantee_exhaustive = false;  // all C(|S|,t) tuples checked
  bool guarantee_ok = false;          // every checked tuple met the threshold
  std::vector<std::string> warnings;
};

// One run of the procedure: draw q probes per part from parts 0..k-2, take
// S' = vertices of part k-1 adjacent to every probe, count bad t-tuples of
// S' (some part sees a common neighborhood below gamma^a * n), then delete
// the highest vertex of each bad tuple in lexicographic tuple order,
// skipping tuples already broken. |S| >= |S'| - X always.
//
// part[v] in [0,k) labels the host's parts; every part must have exactly
// p.n vertices, and every vertex of part k-1 needs >= gamma*n neighbors in
// each other part (PreconditionError naming the offender otherwise).
// The guarantee on S is re-verified exhaustively when C(|S|,t) <= 1e6, by
// 1e5 sampled tuples otherwise (flagged via guarantee_exhaustive). Tuple
// enumeration over S' refuses above 5e6 tuples with BudgetError.
DRCOutcome drc_run(const Graph& host, const std::vector<int>& part, const DRCParams& p,
                   std::uint64_t seed);

struct DRCMonteCarlo {
  long long trials = 0;
  double mean = 0;       // of |S'| - X across trials
  double std_error = 0;  // sample SE; 0 when trials < 2
  double bound = 0;      // n^{1-c/2} / 2
};
// Empirical check of the expectation bound: independent trials with
// per-trial derived seeds, mean and standard error of |S'| - X. Workers
// split the trial range; aggregation is order-independent, so the report
// is identical for any worker count.
DRCMonteCarlo drc_monte_carlo(const Graph& host, const std::vector<int>& part,
                              const DRCParams& p, long long trials, std::uint64_t seed,
                              unsigned workers = 1);

nlohmann::json drc_params_json(const DRCParams& p);
DRCParams drc_params_from_json(const nlohmann::json& j);
nlohmann::json drc_identity_json(const DRCIdentityReport& r);
nlohmann::json drc_outcome_json(const DRCOutcome& o);
nlohmann::json drc_monte_carlo_json(const DRCMonteCarlo& m);

}  // namespace extremal::drc
