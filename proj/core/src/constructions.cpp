#include "extremal/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "extremal/clique.hpp"
#include "extremal/errors.hpp"
#include "extremal/rng.hpp"

namespace extremal::constructions {

namespace {

// C8 with diagonals: triangle-free, independence number 3, 12 edges. The
// densest triangle-free building block on 8 vertices, used as the base of
// every blowup below.
Graph wagner() {
  return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                   {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// Balanced blowup of base onto `total` vertices; for total below the base
// order an induced prefix is used instead (blowups need positive classes).
// Triangle-freeness of the base survives either way.
Graph balanced_blowup(const Graph& base, int total) {
  if (total <= 0) return Graph(0);
  int bn = base.vertex_count();
  if (total < bn) return base.induced(VertexSet::range(total));
  std::vector<int> sizes(static_cast<std::size_t>(bn), total / bn);
  for (int i = 0; i < total % bn; ++i) ++sizes[static_cast<std::size_t>(i)];
  return base.blowup(sizes);
}

// Join of `count` near-equal triangle-free blowups on `total` vertices.
// Clique number is at most 2 * count by join additivity.
Graph layered_trianglefree_join(int total, int count) {
  std::vector<Graph> parts;
  int q = total / count, rem = total % count;
  for (int i = 0; i < count; ++i) parts.push_back(balanced_blowup(wagner(), q + (i < rem)));
  return Graph::join(parts);
}

long long cross_edge_total(const std::vector<int>& sizes) {
  long long total = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = i + 1; j < sizes.size(); ++j)
      total += static_cast<long long>(sizes[i]) * sizes[j];
  return total;
}

}  // namespace

ConstructionReport verify_construction(const Graph& g, int s, int alpha_budget) {
  ConstructionReport r;
  r.omega = clique_number(g);
  r.alpha = independence_number(g);
  r.edges = g.edge_count();
  r.clique_free_ok = r.omega < s;
  r.alpha_ok = r.alpha <= alpha_budget;
  return r;
}

Graph turan_graph(int n, int r) {
  if (r < 1) throw PreconditionError("turan_graph: need r >= 1");
  if (r > n) throw PreconditionError("turan_graph: need r <= n (got r=" + std::to_string(r) +
                                     ", n=" + std::to_string(n) + ")");
  std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
  for (int i = 0; i < n % r; ++i) ++sizes[static_cast<std::size_t>(i)];
  return Graph::complete_multipartite(sizes);
}

std::pair<Graph, ConstructionReport> random_cliquefree_small_alpha(int n, int t,
                                                                   std::uint64_t seed) {
  if (t < 3) throw PreconditionError("random_cliquefree_small_alpha: need t >= 3");
  if (n == 5 && t == 3) {
    // The pentagon is the unique extremal graph here; no sampling can beat it.
    Graph c5 = Graph::cycle(5);
    auto rep = verify_construction(c5, 3, 2);
    return {c5, rep};
  }

  int m = std::min(kMaxVertices, n + n / 8 + 2);
  // Density: the stated shape (c/sqrt(n) for triangles, n^{-2/(t-1)} above),
  // capped so the expected number of surviving K_t's stays near m/8 and the
  // deletion step cannot eat the oversampling buffer.
  double shape = (t == 3) ? 0.5 / std::sqrt(std::max(1, m))
                          : 0.5 * std::pow(std::max(1, m), -2.0 / (t - 1));
  double p = shape;
  if (m >= t) {
    double log_binom = 0;
    for (int i = 0; i < t; ++i) log_binom += std::log((m - i) / double(i + 1));
    double log_safe = (std::log(m / 8.0) - log_binom) / (t * (t - 1) / 2);
    p = std::min(shape, std::exp(log_safe));
  }
  p = std::clamp(p, 0.0, 0.9);

  // Densify to a maximal K_t-free graph: sweep non-edges in lex order and
  // add any whose endpoints' common neighborhood has no K_{t-2}, until a
  // full sweep adds nothing. Every added edge only removes independent
  // sets, so this can only improve the achieved alpha.
  const auto densify = [t](Graph g, CounterRng rng) {
    std::vector<std::pair<int, int>> order;
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v) order.emplace_back(u, v);
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.below(i)]);
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto [u, v] : order) {
        if (g.adjacent(u, v)) continue;
        VertexSet common = VertexSet::from_bits(g.row_bits(u) & g.row_bits(v));
        if (t - 2 >= 2 && clique_number_within(g, common) >= t - 2) continue;
        if (t - 2 == 1 && !common.empty()) continue;
        auto es = g.edges();
        es.emplace_back(u, v);
        g = Graph(g.vertex_count(), std::span<const std::pair<int, int>>(es));
        grew = true;
      }
    }
    return g;
  };

  Graph best(0);
  int best_alpha = -1;
  for (int attempt = 0; attempt <= 8; ++attempt) {
    double pa = attempt == 8 ? 0.0 : p / double(1u << attempt);
    CounterRng rng(seed, static_cast<std::uint64_t>(attempt));
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v)
        if (rng.unit() < pa) es.emplace_back(u, v);
    Graph g(m, std::span<const std::pair<int, int>>(es));
    // One vertex per surviving K_t: drop the highest-index vertex of the
    // lexicographically first copy until none remain.
    while (true) {
      auto clique = find_clique(g, t);
      if (!clique) break;
      int victim = clique->highest();
      g = g.induced(VertexSet::range(g.vertex_count()).without(victim));
    }
    if (g.vertex_count() < n) continue;
    g = densify(g.induced(VertexSet::range(n)), rng.fork(1));
    int alpha = independence_number(g);
    if (best_alpha < 0 || alpha < best_alpha) {
      best = g;
      best_alpha = alpha;
    }
  }
  auto rep = verify_construction(best, t, best_alpha);
  return {best, rep};
}

namespace {

// Shared core of the two- and three-part joins: generate K_{inner}-free
// parts of the given sizes, join them, and certify against the claimed
// forbidden clique. The alpha budget is the max over part alphas (an
// independent set cannot cross a join).
std::pair<Graph, ConstructionReport> join_of_random_parts(const std::vector<int>& sizes,
                                                          int inner, int claim_s,
                                                          std::uint64_t seed) {
  CounterRng base(seed);
  std::vector<Graph> parts;
  int alpha_budget = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    auto [part, rep] = random_cliquefree_small_alpha(sizes[i], inner, base.fork(i).next());
    alpha_budget = std::max(alpha_budget, rep.alpha);
    parts.push_back(std::move(part));
  }
  Graph g = Graph::join(parts);
  auto rep = verify_construction(g, claim_s, alpha_budget);
  rep.target_edges = cross_edge_total(sizes);
  return {std::move(g), rep};
}

}  // namespace

std::pair<Graph, ConstructionReport> two_part_join(int n, int p, std::uint64_t seed) {
  if (p < 2) throw PreconditionError("two_part_join: need p >= 2");
  std::vector<int> sizes{(n + 1) / 2, n / 2};
  return join_of_random_parts(sizes, p + 1, 2 * p + 1, seed);
}

std::pair<Graph, ConstructionReport> two_part_join(const Graph& left, const Graph& right,
                                                   int p) {
  if (p < 2) throw PreconditionError("two_part_join: need p >= 2");
  Graph g = Graph::join(left, right);
  int alpha_budget = std::max(independence_number(left), independence_number(right));
  auto rep = verify_construction(g, 2 * p + 1, alpha_budget);
  rep.target_edges = cross_edge_total({left.vertex_count(), right.vertex_count()});
  return {std::move(g), rep};
}

std::pair<Graph, ConstructionReport> three_part_join(int n, int t, std::uint64_t seed) {
  if (t < 5) throw PreconditionError("three_part_join: need t >= 5");
  std::vector<int> sizes(3, n / 3);
  for (int i = 0; i < n % 3; ++i) ++sizes[static_cast<std::size_t>(i)];
  return join_of_random_parts(sizes, t + 1, 3 * t + 1, seed);
}

std::pair<Graph, ConstructionReport> three_part_join(const Graph& a, const Graph& b,
                                                     const Graph& c, int t) {
  if (t < 5) throw PreconditionError("three_part_join: need t >= 5");
  std::vector<Graph> parts{a, b, c};
  Graph g = Graph::join(parts);
  int alpha_budget = std::max({independence_number(a), independence_number(b),
                               independence_number(c)});
  auto rep = verify_construction(g, 3 * t + 1, alpha_budget);
  rep.target_edges =
      cross_edge_total({a.vertex_count(), b.vertex_count(), c.vertex_count()});
  return {std::move(g), rep};
}

namespace {

// The two conjecture-flavored stand-ins share a shape: a dense first part
// (join of triangle-free layers) on ceil(ratio * n) vertices, a sparse
// triangle-free-layered second part on the rest, joined completely. Layer
// counts pin the clique numbers: omega <= 2 * (layers1 + layers2) < s.
std::pair<Graph, ConstructionReport> conjectured_join(int n, const Rational& first_ratio,
                                                      int layers1, int layers2, int s,
                                                      const Rational& target,
                                                      std::uint64_t seed) {
  (void)seed;  // fully deterministic; kept for interface uniformity
  if (n < 2) throw PreconditionError("conjectured construction: need n >= 2");
  BigInt num = numerator(first_ratio) * n;
  BigInt den = denominator(first_ratio);
  int first = BigInt((num + den - 1) / den).convert_to<int>();  // ceil(ratio * n)
  first = std::min(first, n);
  Graph g = Graph::join(layered_trianglefree_join(first, layers1),
                        layered_trianglefree_join(n - first, layers2));
  auto rep = verify_construction(g, s, n);
  rep.alpha_ok = true;  // no independence claim is made for these stand-ins
  rep.target_edges = target;
  return {std::move(g), rep};
}

}  // namespace

std::pair<Graph, ConstructionReport> conjectured_k9(int n, std::uint64_t seed) {
  // Parts (ceil(3n/5), rest): K6-free join-of-two over K4-free single layer,
  // so omega <= 4 + 2 = 6 < 9. Edge target 3n^2/10.
  return conjectured_join(n, ratio(3, 5), 2, 1, 9, ratio(3, 10) * n * n, seed);
}

std::pair<Graph, ConstructionReport> conjectured_k12(int n, std::uint64_t seed) {
  // Parts (ceil(8n/13), rest): K7-free join-of-three over K5-free
  // join-of-two, omega <= 6 + 4 = 10 < 12. Edge target 4n^2/13.
  return conjectured_join(n, ratio(8, 13), 3, 2, 12, ratio(4, 13) * n * n, seed);
}

std::vector<int> ratio_parts(int n, const std::vector<Rational>& ratios) {
  if (ratios.empty()) throw PreconditionError("ratio_parts: need at least one ratio");
  Rational sum = 0;
  for (const Rational& r : ratios) {
    if (r <= 0) throw PreconditionError("ratio_parts: ratios must be positive");
    sum += r;
  }
  if (sum != 1) throw PreconditionError("ratio_parts: ratios must sum to 1");
  std::vector<int> parts(ratios.size());
  std::vector<std::pair<Rational, std::size_t>> rema;
  int used = 0;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    Rational exact = ratios[i] * n;
    BigInt fl = rational_floor(exact);
    parts[i] = fl.convert_to<int>();
    used += parts[i];
    rema.emplace_back(exact - fl, i);
  }
  // Hand out the leftover units by largest remainder, ties to lower index.
  std::stable_sort(rema.begin(), rema.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int k = 0; k < n - used; ++k) ++parts[rema[static_cast<std::size_t>(k)].second];
  return parts;
}

ConstructionSpec ConstructionSpec::from_json(const nlohmann::json& j) {
  ConstructionSpec spec;
  spec.kind = j.at("kind").get<std::string>();
  spec.n = j.at("n").get<int>();
  if (j.contains("forbidden_clique")) spec.forbidden_clique = j["forbidden_clique"].get<int>();
  if (j.contains("inner_forbidden")) spec.inner_forbidden = j["inner_forbidden"].get<int>();
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("part_ratios"))
    for (const auto& r : j["part_ratios"]) {
      if (r.is_string()) {
        auto parsed = parse_rational(r.get<std::string>());
        if (!parsed)
          throw PreconditionError("construction spec: bad ratio '" + r.get<std::string>() +
                                  "'");
        spec.part_ratios.push_back(*parsed);
      } else {
        spec.part_ratios.push_back(Rational(r.get<long long>()));
      }
    }
  return spec;
}

std::pair<Graph, ConstructionReport> run_construction(const ConstructionSpec& spec) {
  const auto check_ratios = [&](std::size_t want) {
    if (spec.part_ratios.empty()) return;
    if (spec.part_ratios.size() != want)
      throw PreconditionError("construction spec: kind '" + spec.kind + "' takes " +
                              std::to_string(want) + " part ratios");
    Rational sum = 0;
    for (const Rational& r : spec.part_ratios) {
      if (r <= 0) throw PreconditionError("construction spec: ratios must be positive");
      sum += r;
    }
    if (sum != 1) throw PreconditionError("construction spec: ratios must sum to 1");
  };

  if (spec.kind == "turan") {
    if (spec.forbidden_clique < 2)
      throw PreconditionError("construction spec: turan needs forbidden_clique >= 2");
    int r = spec.forbidden_clique - 1;
    check_ratios(static_cast<std::size_t>(r));
    Graph g = turan_graph(spec.n, r);
    auto rep = verify_construction(g, spec.forbidden_clique, (spec.n + r - 1) / r);
    rep.target_edges = g.edge_count();
    return {std::move(g), rep};
  }
  if (spec.kind == "two_part_join") {
    int p = spec.inner_forbidden - 1;
    if (p < 2)
      throw PreconditionError("construction spec: two_part_join needs inner_forbidden >= 3");
    if (spec.forbidden_clique && spec.forbidden_clique < 2 * p + 1)
      throw PreconditionError(
          "construction spec: two K_{p+1}-free parts give omega <= 2p; forbidden_clique " +
          std::to_string(spec.forbidden_clique) + " is below 2p+1");
    check_ratios(2);
    if (spec.part_ratios.empty()) return two_part_join(spec.n, p, spec.seed);
    auto sizes = ratio_parts(spec.n, spec.part_ratios);
    return join_of_random_parts(sizes, p + 1,
                                spec.forbidden_clique ? spec.forbidden_clique : 2 * p + 1,
                                spec.seed);
  }
  if (spec.kind == "three_part_join") {
    int t = spec.inner_forbidden - 1;
    if (t < 5)
      throw PreconditionError("construction spec: three_part_join needs inner_forbidden >= 6");
    if (spec.forbidden_clique && spec.forbidden_clique < 3 * t + 1)
      throw PreconditionError(
          "construction spec: three K_{t+1}-free parts give omega <= 3t; forbidden_clique " +
          std::to_string(spec.forbidden_clique) + " is below 3t+1");
    check_ratios(3);
    if (spec.part_ratios.empty()) return three_part_join(spec.n, t, spec.seed);
    auto sizes = ratio_parts(spec.n, spec.part_ratios);
    return join_of_random_parts(sizes, t + 1,
                                spec.forbidden_clique ? spec.forbidden_clique : 3 * t + 1,
                                spec.seed);
  }
  if (spec.kind == "conjectured_k9" || spec.kind == "conjectured_k12") {
    bool k9 = spec.kind == "conjectured_k9";
    if (spec.forbidden_clique && spec.forbidden_clique != (k9 ? 9 : 12))
      throw PreconditionError("construction spec: " + spec.kind + " is a K" +
                              std::to_string(k9 ? 9 : 12) + "-free construction");
    if (spec.inner_forbidden)
      throw PreconditionError(
          "construction spec: inner part bounds are fixed for " + spec.kind);
    if (!spec.part_ratios.empty())
      throw PreconditionError("construction spec: part ratios are fixed for " + spec.kind);
    return k9 ? conjectured_k9(spec.n, spec.seed) : conjectured_k12(spec.n, spec.seed);
  }
  throw PreconditionError("construction spec: unknown kind '" + spec.kind + "'");
}

nlohmann::json construction_report_json(const ConstructionReport& r) {
  return nlohmann::json{{"omega", r.omega},
                        {"alpha", r.alpha},
                        {"edges", r.edges},
                        {"target_edges", rational_json(r.target_edges)},
                        {"clique_free_ok", r.clique_free_ok},
                        {"alpha_ok", r.alpha_ok}};
}

}  // namespace extremal::constructions
