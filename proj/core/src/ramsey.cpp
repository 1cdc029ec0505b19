#include "extremal/ramsey.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "extremal/clique.hpp"
#include "extremal/enumerate.hpp"
#include "extremal/errors.hpp"
#include "extremal/graph6.hpp"

namespace extremal::ramsey {

namespace {

Graph circulant(int n, std::initializer_list<int> jumps) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < n; ++v)
    for (int j : jumps) es.emplace_back(std::min(v, (v + j) % n), std::max(v, (v + j) % n));
  return Graph(n, std::span<const std::pair<int, int>>(es));
}

void verify_witness(const RamseyEntry& e) {
  if (!e.witness_graph6) return;
  Graph g = from_graph6(*e.witness_graph6);
  if (g.vertex_count() != e.lower - 1)
    throw PreconditionError("ramsey witness for R(" + std::to_string(e.t) + "," +
                            std::to_string(e.m) + ") has " +
                            std::to_string(g.vertex_count()) + " vertices, expected " +
                            std::to_string(e.lower - 1));
  if (has_clique(g, e.t))
    throw PreconditionError("ramsey witness for R(" + std::to_string(e.t) + "," +
                            std::to_string(e.m) + ") contains a K_" + std::to_string(e.t));
  if (independence_number(g) >= e.m)
    throw PreconditionError("ramsey witness for R(" + std::to_string(e.t) + "," +
                            std::to_string(e.m) + ") has an independent set of size " +
                            std::to_string(e.m));
}

}  // namespace

std::optional<RamseyEntry> RamseyTable::lookup(int t, int m) const {
  if (t < 1 || m < 1) throw PreconditionError("ramsey table: need t, m >= 1");
  if (t == 1 || m == 1) return RamseyEntry{t, m, 1, 1, std::nullopt};
  if (t == 2) return RamseyEntry{t, m, m, m, std::nullopt};
  if (m == 2) return RamseyEntry{t, m, t, t, std::nullopt};
  auto it = entries_.find({t, m});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void RamseyTable::insert(RamseyEntry entry) {
  if (entry.t < 2 || entry.m < 2) throw PreconditionError("ramsey table: need t, m >= 2");
  if (entry.lower < 2 || entry.upper < entry.lower)
    throw PreconditionError("ramsey table: entry bounds out of order");
  verify_witness(entry);
  entries_[{entry.t, entry.m}] = std::move(entry);
}

nlohmann::json RamseyTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, e] : entries_) rows.push_back(ramsey_entry_json(e));
  return nlohmann::json{{"entries", rows}};
}

RamseyTable RamseyTable::from_json(const nlohmann::json& j) {
  RamseyTable table;
  for (const auto& row : j.at("entries")) {
    RamseyEntry e;
    e.t = row.at("t").get<int>();
    e.m = row.at("m").get<int>();
    if (row.at("status") == "exact") {
      e.lower = e.upper = row.at("value").get<int>();
    } else if (row.at("status") == "interval") {
      e.lower = row.at("lower").get<int>();
      e.upper = row.at("upper").get<int>();
    } else {
      throw PreconditionError("ramsey table: unknown status '" +
                              row.at("status").get<std::string>() + "'");
    }
    if (row.contains("witness_graph6")) e.witness_graph6 = row["witness_graph6"].get<std::string>();
    table.insert(std::move(e));
  }
  return table;
}

RamseyTable RamseyTable::defaults() {
  RamseyTable table;
  table.insert({3, 3, 6, 6, to_graph6(Graph::cycle(5))});
  table.insert({3, 4, 9, 9, to_graph6(circulant(8, {1, 4}))});
  table.insert({3, 5, 14, 14, to_graph6(circulant(13, {1, 5}))});
  return table;
}

long long ramsey_upper_dp(const RamseyTable& table, int t, int m) {
  if (t < 1 || m < 1) throw PreconditionError("ramsey_upper_dp: need t, m >= 1");
  constexpr long long kSaturation = 1000000000000000000LL;
  // Complementation gives R(t,m) = R(m,t), so both orientations of a stored
  // row may seed the recurrence.
  auto exact_of = [&](int a, int b) -> std::optional<int> {
    if (auto e = table.lookup(a, b); e && e->exact()) return e->value();
    if (auto e = table.lookup(b, a); e && e->exact()) return e->value();
    return std::nullopt;
  };
  std::map<std::pair<int, int>, long long> memo;
  auto solve = [&](auto&& self, int tt, int mm) -> long long {
    if (auto v = exact_of(tt, mm)) return *v;
    if (auto it = memo.find({tt, mm}); it != memo.end()) return it->second;
    long long bound = self(self, tt - 1, mm) + self(self, tt, mm - 1);
    bound = std::min(bound, kSaturation);
    if (auto e = table.lookup(tt, mm); e && e->upper < bound) bound = e->upper;
    if (auto e = table.lookup(mm, tt); e && e->upper < bound) bound = e->upper;
    memo[{tt, mm}] = bound;
    return bound;
  };
  return solve(solve, t, m);
}

RamseyEntry ramsey_exact(int t, int m, const RamseySearchOptions& opt) {
  if (t < 2 || m < 2) throw PreconditionError("ramsey_exact: need t, m >= 2");
  if (t == 2) return {t, m, m, m, to_graph6(Graph(m - 1))};
  if (m == 2) return {t, m, t, t, to_graph6(Graph::complete(t - 1))};

  RamseyTable table = RamseyTable::defaults();
  EnumerateOptions eopt;
  eopt.forbid_clique = t;
  eopt.alpha_max = m - 1;
  // Neighborhoods are K_{t-1}-free with independence below m, capping the
  // degree at R(t-1,m) - 1; an upper estimate of that value keeps the prune
  // sound.
  eopt.max_degree =
      static_cast<int>(std::min<long long>(ramsey_upper_dp(table, t - 1, m) - 1, kMaxVertices));
  eopt.workers = opt.workers;
  eopt.max_reps_per_level = opt.max_reps_per_level;

  const auto dp_upper = [&] {
    return static_cast<int>(std::min<long long>(ramsey_upper_dp(table, t, m), 1 << 30));
  };
  std::vector<Graph> level{Graph(1)};
  int n = 1;
  std::string witness = to_graph6(level.front());
  while (true) {
    if (n >= opt.vertex_budget) {
      // Still alive at the budget: R > n is certified, exactness is not.
      return {t, m, n + 1, dp_upper(), witness};
    }
    std::vector<Graph> next;
    try {
      next = extend_representatives(level, eopt);
    } catch (const BudgetError&) {
      return {t, m, n + 1, dp_upper(), witness};
    }
    if (next.empty()) return {t, m, n + 1, n + 1, witness};
    ++n;
    level = std::move(next);
    witness = to_graph6(level.front());
  }
}

int inverse_ramsey_q(int t, int n, const RamseyTable& table) {
  if (t < 2 || n < 1) throw PreconditionError("inverse_ramsey_q: need t >= 2, n >= 1");
  // R is strictly increasing in m (append an isolated vertex to a witness),
  // so a resolved R(t,m) pushes a certified lower bound onto R(t,m+1) even
  // when that row is absent from the table.
  int chain_lower = 2;  // R(t,2) >= 2
  for (int m = 1;; ++m) {
    // Invariant here: R(t,m) <= n, established for m=1 by R(t,1)=1.
    auto next = table.lookup(t, m + 1);
    int lo = std::max(chain_lower, next ? next->lower : 0);
    if (lo > n) return m;                              // n < R(t,m+1) for sure
    if (next && next->upper <= n) {                    // R(t,m+1) <= n for sure
      chain_lower = std::max(lo, next->lower) + 1;
      continue;
    }
    throw PreconditionError("inverse_ramsey_q: table cannot place n=" + std::to_string(n) +
                            " against R(" + std::to_string(t) + "," + std::to_string(m + 1) +
                            ")");
  }
}

long long shearer_threshold(long long k) {
  if (k < 2) throw PreconditionError("shearer_threshold: need k >= 2");
  // Exact integer arithmetic when log2 k is an integer, floating ceil
  // otherwise (an irrational log cannot make the quotient integral).
  if ((k & (k - 1)) == 0) {
    long long j = 0;
    for (long long v = k; v > 1; v >>= 1) ++j;
    return (2 * k * k + j - 1) / j;
  }
  return static_cast<long long>(std::ceil(2.0 * double(k) * double(k) / std::log2(double(k))));
}

double QEnvelope::lower(double n) const {
  if (n < 2) throw PreconditionError("q envelope: need n >= 2");
  return c_lower * std::pow(n, n_exp_lower) * std::pow(std::log2(n), log_exp_lower);
}

double QEnvelope::upper(double n) const {
  if (n < 2) throw PreconditionError("q envelope: need n >= 2");
  return c_upper * std::pow(n, n_exp_upper) * std::pow(std::log2(n), log_exp_upper);
}

QEnvelope q_envelope(int t) {
  if (t == 4) return {4, 1, 1.0 / 3, 2.0 / 3, 1, 2.0 / 5, 4.0 / 5};
  if (t == 5) return {5, 1, 1.0 / 4, 3.0 / 4, 1, 1.0 / 3, 8.0 / 9};
  throw PreconditionError("q_envelope: only t in {4,5} has a quoted envelope");
}

std::pair<double, double> q3_envelope(double n) {
  if (n < 2) throw PreconditionError("q3_envelope: need n >= 2");
  double base = std::sqrt(n * std::log2(n));
  return {base / std::sqrt(2.0), base * std::sqrt(2.0)};
}

nlohmann::json ramsey_entry_json(const RamseyEntry& e) {
  nlohmann::json row{{"t", e.t}, {"m", e.m}};
  if (e.exact()) {
    row["status"] = "exact";
    row["value"] = e.lower;
  } else {
    row["status"] = "interval";
    row["lower"] = e.lower;
    row["upper"] = e.upper;
  }
  if (e.witness_graph6) row["witness_graph6"] = *e.witness_graph6;
  return row;
}

}  // namespace extremal::ramsey
