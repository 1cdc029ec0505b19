#include "extremal/rt.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "extremal/clique.hpp"
#include "extremal/constructions.hpp"
#include "extremal/enumerate.hpp"
#include "extremal/errors.hpp"
#include "extremal/graph6.hpp"
#include "extremal/ramsey.hpp"
#include "extremal/rng.hpp"

namespace extremal::rt {

namespace {

void check_query(const RTQuery& q) {
  if (q.s < 3) throw PreconditionError("rt query: need s >= 3");
  if (q.alpha_budget < 1) throw PreconditionError("rt query: need alpha_budget >= 1");
  if (q.n < 0) throw PreconditionError("rt query: need n >= 0");
}

bool feasible_graph(const Graph& g, const RTQuery& q) {
  return !has_clique(g, q.s) && independence_number(g) <= q.alpha_budget;
}

// Adding (u,v) creates a K_s exactly when the common neighborhood already
// holds a K_{s-2}; edge additions never enlarge independent sets, so the
// alpha budget needs no re-check on the add path.
bool addition_safe(const Graph& g, int u, int v, int s) {
  VertexSet common = VertexSet::from_bits(g.row_bits(u) & g.row_bits(v));
  if (s - 2 == 1) return common.empty();
  return clique_number_within(g, common) < s - 2;
}

Graph with_edge(const Graph& g, int u, int v) {
  auto es = g.edges();
  es.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(g.vertex_count(), std::span<const std::pair<int, int>>(es));
}

}  // namespace

RTRecord rt_exact(const RTQuery& q, const RTSearchOptions& opt) {
  check_query(q);
  if (q.n > opt.exact_limit)
    throw BudgetError("rt_exact: n=" + std::to_string(q.n) + " exceeds the exhaustive limit " +
                      std::to_string(opt.exact_limit) + "; use the heuristic search");
  EnumerateOptions eopt;
  eopt.forbid_clique = q.s;
  eopt.alpha_max = q.alpha_budget;
  eopt.workers = opt.workers;
  eopt.max_reps_per_level = opt.max_reps_per_level;
  std::vector<Graph> reps = enumerate_nonisomorphic(q.n, eopt);

  RTRecord rec;
  rec.query = q;
  rec.method = "exact";
  if (reps.empty()) return rec;  // constraints admit no graph at this order
  const Graph* best = nullptr;
  for (const Graph& g : reps)
    if (!best || g.edge_count() > best->edge_count()) best = &g;
  rec.lower = rec.upper = best->edge_count();
  rec.witness_graph6 = to_graph6(*best);
  return rec;
}

long long rt_upper_trivial(const RTQuery& q) {
  check_query(q);
  long long turan = constructions::turan_graph(q.n, std::min(q.n, q.s - 1)).edge_count();
  if (q.n == 0) return 0;
  long long r_ub = ramsey::ramsey_upper_dp(ramsey::RamseyTable::defaults(), q.s - 1,
                                           q.alpha_budget + 1);
  long long degree_cap = std::min<long long>(r_ub - 1, q.n - 1);
  return std::min(turan, q.n * degree_cap / 2);
}

RTRecord rt_heuristic_lower(const RTQuery& q, std::uint64_t seed, int iterations) {
  check_query(q);
  RTRecord rec;
  rec.query = q;
  rec.method = "heuristic";
  rec.upper = rt_upper_trivial(q);

  std::optional<Graph> best;
  auto offer = [&](const Graph& g) {
    if (g.vertex_count() != q.n || !feasible_graph(g, q)) return;
    if (!best || g.edge_count() > best->edge_count()) best = g;
  };

  // Seed 1: the densest feasible Turan graph. alpha(T(n,k)) = ceil(n/k),
  // which only shrinks as the part count k grows, so the first feasible k
  // on the way down is the densest one.
  if (q.n == 0) offer(Graph(0));
  for (int k = std::min(q.n, q.s - 1); k >= 1; --k) {
    if ((q.n + k - 1) / k > q.alpha_budget) continue;
    offer(constructions::turan_graph(q.n, k));
    break;
  }

  // Seed 2: join of floor((s-1)/2) triangle-free pieces, plus an edgeless
  // remainder part within the alpha budget when s-1 is odd. Piece alphas
  // are measured, not assumed; infeasible assemblies are simply not offered.
  {
    int k = (q.s - 1) / 2;
    int spare = (q.s - 1) % 2 ? std::min(q.alpha_budget, q.n / (2 * k + 1)) : 0;
    int body = q.n - spare;
    if (k >= 1 && body >= 0) {
      CounterRng rng(seed);
      std::vector<Graph> parts;
      for (int i = 0; i < k; ++i) {
        int size = body / k + (i < body % k ? 1 : 0);
        auto [piece, piece_rep] =
            constructions::random_cliquefree_small_alpha(size, 3, rng.fork(i).next());
        parts.push_back(std::move(piece));
      }
      if (spare > 0) parts.push_back(Graph(spare));
      offer(Graph::join(parts));
    }
  }

  // Local search: random edge additions (always safe for alpha) and vertex
  // rewires (revert unless the result stays feasible and at least as dense).
  if (best && q.n >= 2) {
    Graph cur = *best;
    CounterRng rng(seed, 0x9e3779b97f4a7c15ull);
    for (int it = 0; it < iterations; ++it) {
      int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(q.n)));
      int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(q.n)));
      if (u == v) continue;
      if (!cur.adjacent(u, v)) {
        if (addition_safe(cur, u, v, q.s)) {
          cur = with_edge(cur, u, v);
          offer(cur);
        }
        continue;
      }
      // Rewire u: drop its edges, then greedily reattach in random order.
      Graph stripped = [&] {
        std::vector<std::pair<int, int>> es;
        for (auto [a, b] : cur.edges())
          if (a != u && b != u) es.emplace_back(a, b);
        return Graph(q.n, std::span<const std::pair<int, int>>(es));
      }();
      std::vector<int> order;
      for (int w = 0; w < q.n; ++w)
        if (w != u) order.push_back(w);
      for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
      Graph candidate = stripped;
      for (int w : order)
        if (addition_safe(candidate, u, w, q.s)) candidate = with_edge(candidate, u, w);
      if (candidate.edge_count() >= cur.edge_count() && feasible_graph(candidate, q)) {
        cur = candidate;
        offer(cur);
      }
    }
  }

  if (best) {
    rec.lower = best->edge_count();
    rec.witness_graph6 = to_graph6(*best);
  }
  return rec;
}

nlohmann::json rt_record_json(const RTRecord& r) {
  nlohmann::json j{{"n", r.query.n},
                   {"s", r.query.s},
                   {"alpha_budget", r.query.alpha_budget},
                   {"method", r.method},
                   {"feasible", r.feasible()}};
  if (r.feasible()) {
    if (r.exact()) {
      j["value"] = r.lower;
    } else {
      j["lower"] = r.lower;
      j["upper"] = r.upper;
    }
    if (r.witness_graph6) j["witness_graph6"] = *r.witness_graph6;
  }
  return j;
}

RTRecord rt_record_from_json(const nlohmann::json& j) {
  RTRecord r;
  r.query = {j.at("n").get<int>(), j.at("s").get<int>(), j.at("alpha_budget").get<int>()};
  r.method = j.at("method").get<std::string>();
  if (j.at("feasible").get<bool>()) {
    if (j.contains("value")) {
      r.lower = r.upper = j["value"].get<long long>();
    } else {
      r.lower = j.at("lower").get<long long>();
      r.upper = j.at("upper").get<long long>();
    }
    if (j.contains("witness_graph6")) r.witness_graph6 = j["witness_graph6"].get<std::string>();
  }
  return r;
}

}  // namespace extremal::rt
