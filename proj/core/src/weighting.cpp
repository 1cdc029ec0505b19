#include "extremal/weighting.hpp"

#include <algorithm>
#include <array>

#include "extremal/canonical.hpp"
#include "extremal/enumerate.hpp"
#include "extremal/graph6.hpp"
#include "extremal/parallel.hpp"
#include "extremal/rng.hpp"

namespace extremal::weighting {

namespace {

// Order of the largest clique containing edge (u,v): the endpoints plus the
// largest clique inside their common neighborhood.
int edge_clique_order(const Graph& g, int u, int v) {
  std::uint64_t common = g.row_bits(u) & g.row_bits(v);
  return 2 + clique_number_within(g, VertexSet::from_bits(common));
}

Rational weight_for_order(int r) { return Rational(r, 2 * (r - 1)); }

}  // namespace

WeightAssignment standard_weighting(const Graph& g, const SearchOptions& opt) {
  if (g.vertex_count() > opt.exact_limit)
    throw BudgetError("standard_weighting: order exceeds the exact-search limit of " +
                      std::to_string(opt.exact_limit));
  WeightAssignment w;
  w.edges = g.edges();
  w.weights.reserve(w.edges.size());
  w.total = 0;
  for (auto [u, v] : w.edges) {
    Rational weight = weight_for_order(edge_clique_order(g, u, v));
    w.total += weight;
    w.weights.push_back(std::move(weight));
  }
  return w;
}

Rational standard_total(const Graph& g) {
  // Bucket edges by clique order; at most n distinct orders keeps the exact
  // rational arithmetic off the hot path.
  std::array<long long, kMaxVertices + 1> count{};
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    std::uint64_t higher = g.row_bits(u) >> (u + 1);
    for (std::uint64_t b = higher; b; b &= b - 1) {
      int v = u + 1 + __builtin_ctzll(b);
      ++count[static_cast<std::size_t>(edge_clique_order(g, u, v))];
    }
  }
  Rational total = 0;
  for (int r = 2; r <= kMaxVertices; ++r)
    if (count[static_cast<std::size_t>(r)])
      total += Rational(count[static_cast<std::size_t>(r)]) * weight_for_order(r);
  return total;
}

QuarterBoundReport verify_quarter_bound(const Graph& g) {
  QuarterBoundReport rep;
  rep.total = standard_total(g);
  rep.bound = Rational(static_cast<long long>(g.vertex_count()) * g.vertex_count(), 4);
  rep.holds = rep.total <= rep.bound;
  return rep;
}

namespace {

// 0: edge in no triangle, 1: triangle but no K4, 2: in some K4.
int chubby_class(const Graph& g, int u, int v) {
  std::uint64_t common = g.row_bits(u) & g.row_bits(v);
  if (!common) return 0;
  // K4 through (u,v) <=> an edge inside the common neighborhood.
  for (std::uint64_t b = common; b; b &= b - 1) {
    int w = __builtin_ctzll(b);
    if (g.row_bits(w) & (b & (b - 1))) return 2;
  }
  return 1;
}

const Rational kChubbyWeights[3] = {Rational(1), Rational(4, 5), Rational(2, 3)};

void check_k5free(const Graph& g, const SearchOptions& opt, const char* what) {
  if (g.vertex_count() > opt.exact_limit)
    throw BudgetError(std::string(what) + ": order exceeds the exact-search limit of " +
                      std::to_string(opt.exact_limit));
  if (find_clique(g, 5, opt))
    throw PreconditionError(std::string(what) + ": graph contains a K5");
}

}  // namespace

WeightAssignment chubby_weighting_k5free(const Graph& g, const SearchOptions& opt) {
  check_k5free(g, opt, "chubby_weighting_k5free");
  WeightAssignment w;
  w.edges = g.edges();
  w.weights.reserve(w.edges.size());
  w.total = 0;
  for (auto [u, v] : w.edges) {
    const Rational& weight = kChubbyWeights[chubby_class(g, u, v)];
    w.total += weight;
    w.weights.push_back(weight);
  }
  return w;
}

Rational chubby_total_k5free(const Graph& g) {
  check_k5free(g, {}, "chubby_total_k5free");
  // Scaled by 15: weights {15, 12, 10}.
  static constexpr int kScaled[3] = {15, 12, 10};
  long long total15 = 0;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    std::uint64_t higher = g.row_bits(u) >> (u + 1);
    for (std::uint64_t b = higher; b; b &= b - 1) {
      int v = u + 1 + __builtin_ctzll(b);
      total15 += kScaled[chubby_class(g, u, v)];
    }
  }
  return Rational(total15, 15);
}

namespace {

struct CoverSearch {
  std::vector<std::uint64_t> tri_edge_masks;  // triangles as edge-index masks (<= 64 edges)
  std::vector<std::vector<int>> tris_of_edge;
  int edge_total;

  std::vector<int> cover_count;  // per triangle: how many chosen edges cover it
  std::uint64_t chosen = 0;
  int chosen_size = 0;
  std::uint64_t best = ~0ull;
  int best_size = 0;

  int first_uncovered() const {
    for (std::size_t t = 0; t < cover_count.size(); ++t)
      if (cover_count[t] == 0) return static_cast<int>(t);
    return -1;
  }

  // Greedy count of edge-disjoint uncovered triangles; each needs its own
  // cover edge, so chosen_size + count is a valid lower bound.
  int disjoint_lower_bound() const {
    std::uint64_t used = 0;
    int cnt = 0;
    for (std::size_t t = 0; t < cover_count.size(); ++t)
      if (cover_count[t] == 0 && !(tri_edge_masks[t] & used)) {
        used |= tri_edge_masks[t];
        ++cnt;
      }
    return cnt;
  }

  void take(int e, int delta) {
    for (int t : tris_of_edge[static_cast<std::size_t>(e)]) cover_count[static_cast<std::size_t>(t)] += delta;
  }

  void search(const std::vector<int>& branch_order) {
    if (chosen_size + disjoint_lower_bound() >= best_size) return;
    int t = first_uncovered();
    if (t < 0) {
      best = chosen;
      best_size = chosen_size;
      return;
    }
    // Branch on the three edges of the first uncovered triangle, in global
    // participation order.
    std::array<int, 3> es{};
    int cnt = 0;
    for (std::uint64_t b = tri_edge_masks[static_cast<std::size_t>(t)]; b; b &= b - 1)
      es[static_cast<std::size_t>(cnt++)] = __builtin_ctzll(b);
    std::sort(es.begin(), es.end(), [&](int a, int b2) {
      return branch_order[static_cast<std::size_t>(a)] < branch_order[static_cast<std::size_t>(b2)];
    });
    for (int i = 0; i < 3; ++i) {
      int e = es[static_cast<std::size_t>(i)];
      chosen |= 1ull << e;
      ++chosen_size;
      take(e, +1);
      search(branch_order);
      take(e, -1);
      --chosen_size;
      chosen &= ~(1ull << e);
    }
  }
};

}  // namespace

TriangleCover min_triangle_edge_cover(const Graph& g, const SearchOptions& opt) {
  int n = g.vertex_count();
  if (n > opt.exact_limit)
    throw BudgetError("min_triangle_edge_cover: order " + std::to_string(n) +
                      " exceeds the exact-search limit of " + std::to_string(opt.exact_limit));
  auto edges = g.edges();
  if (edges.size() > 64)
    throw BudgetError("min_triangle_edge_cover: " + std::to_string(edges.size()) +
                      " edges exceed the 64-edge cover search cap");
  std::vector<std::vector<int>> edge_index(static_cast<std::size_t>(n),
                                           std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edge_index[static_cast<std::size_t>(edges[i].first)][static_cast<std::size_t>(edges[i].second)] =
        static_cast<int>(i);
    edge_index[static_cast<std::size_t>(edges[i].second)][static_cast<std::size_t>(edges[i].first)] =
        static_cast<int>(i);
  }

  CoverSearch cs;
  cs.edge_total = static_cast<int>(edges.size());
  cs.tris_of_edge.assign(edges.size(), {});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        int t = static_cast<int>(cs.tri_edge_masks.size());
        std::uint64_t mask = 0;
        for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
          int e = edge_index[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
          mask |= 1ull << e;
          cs.tris_of_edge[static_cast<std::size_t>(e)].push_back(t);
        }
        cs.tri_edge_masks.push_back(mask);
      }
    }

  TriangleCover result;
  result.triangle_count = static_cast<long long>(cs.tri_edge_masks.size());
  if (cs.tri_edge_masks.empty()) return result;

  cs.cover_count.assign(cs.tri_edge_masks.size(), 0);

  // Branch order: heavy participation first, ties by edge index.
  std::vector<int> order_rank(edges.size());
  {
    std::vector<int> idx(edges.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return cs.tris_of_edge[static_cast<std::size_t>(a)].size() >
             cs.tris_of_edge[static_cast<std::size_t>(b)].size();
    });
    for (std::size_t rank = 0; rank < idx.size(); ++rank)
      order_rank[static_cast<std::size_t>(idx[rank])] = static_cast<int>(rank);
  }

  // Greedy initial upper bound (most uncovered triangles first).
  {
    std::vector<bool> covered(cs.tri_edge_masks.size(), false);
    std::uint64_t greedy = 0;
    int greedy_size = 0;
    std::size_t left = cs.tri_edge_masks.size();
    while (left > 0) {
      int best_e = -1;
      std::size_t best_gain = 0;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if ((greedy >> e) & 1) continue;
        std::size_t gain = 0;
        for (int t : cs.tris_of_edge[e])
          if (!covered[static_cast<std::size_t>(t)]) ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best_e = static_cast<int>(e);
        }
      }
      greedy |= 1ull << best_e;
      ++greedy_size;
      for (int t : cs.tris_of_edge[static_cast<std::size_t>(best_e)]) {
        if (!covered[static_cast<std::size_t>(t)]) {
          covered[static_cast<std::size_t>(t)] = true;
          --left;
        }
      }
    }
    cs.best = greedy;
    cs.best_size = greedy_size;
  }

  cs.search(order_rank);

  // Certificate check: the cover really meets every triangle.
  for (std::uint64_t mask : cs.tri_edge_masks)
    if (!(mask & cs.best))
      throw std::logic_error("min_triangle_edge_cover: certificate check failed");

  result.size = cs.best_size;
  for (std::uint64_t b = cs.best; b; b &= b - 1)
    result.cover.push_back(edges[static_cast<std::size_t>(__builtin_ctzll(b))]);
  std::sort(result.cover.begin(), result.cover.end());
  return result;
}

HeavyFreeOptimum heavy_free_optimum(const Graph& g, const Rational& a, const SearchOptions& opt) {
  if (a < 0 || a > 1)
    throw PreconditionError("heavy_free_optimum: threshold must lie in [0, 1]");
  if (find_clique(g, 4, opt))
    throw PreconditionError("heavy_free_optimum: graph must be K4-free");
  TriangleCover cover = min_triangle_edge_cover(g, opt);

  HeavyFreeOptimum out;
  out.cover_size = cover.size;
  out.value = Rational(g.edge_count()) - (Rational(1) - a) * Rational(cover.size);

  out.witness.edges = g.edges();
  out.witness.total = 0;
  std::vector<std::pair<int, int>> sorted_cover = cover.cover;
  for (auto e : out.witness.edges) {
    bool covered = std::binary_search(sorted_cover.begin(), sorted_cover.end(), e);
    Rational weight = covered ? a : Rational(1);
    out.witness.total += weight;
    out.witness.weights.push_back(std::move(weight));
  }
  // Admissibility certificate: every triangle sees a weight <= a.
  int n = g.vertex_count();
  auto weight_of = [&](int u, int v) {
    auto it = std::lower_bound(out.witness.edges.begin(), out.witness.edges.end(),
                               std::pair{std::min(u, v), std::max(u, v)});
    return out.witness.weights[static_cast<std::size_t>(it - out.witness.edges.begin())];
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!g.adjacent(x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (!g.adjacent(x, z) || !g.adjacent(y, z)) continue;
        if (weight_of(x, y) > a && weight_of(x, z) > a && weight_of(y, z) > a)
          throw std::logic_error("heavy_free_optimum: witness admissibility check failed");
      }
    }
  if (out.witness.total != out.value)
    throw std::logic_error("heavy_free_optimum: witness total does not match value");
  return out;
}

namespace {

// K4-free test on a labeled bitmask graph without building a Graph: the
// scans' reject path. Pairs are indexed lexicographically.
struct LabeledScan {
  int n;
  std::vector<std::pair<int, int>> pairs;

  explicit LabeledScan(int n_) : n(n_) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }

  Graph materialize(std::uint64_t mask) const {
    std::vector<std::pair<int, int>> es;
    for (std::uint64_t b = mask; b; b &= b - 1)
      es.push_back(pairs[static_cast<std::size_t>(__builtin_ctzll(b))]);
    return Graph(n, std::span<const std::pair<int, int>>(es));
  }
};

ScanRecord heuristic_heavy_free(int n, const Rational& a, std::uint64_t seed);
ScanRecord heuristic_chubby(int n, std::uint64_t seed);

}  // namespace

ScanRecord extremal_heavy_free_scan(int n, const Rational& a, unsigned workers,
                                    std::uint64_t seed) {
  if (a < 0 || a > 1)
    throw PreconditionError("extremal_heavy_free_scan: threshold must lie in [0, 1]");
  if (n < 1) throw PreconditionError("extremal_heavy_free_scan: n must be >= 1");
  ScanRecord rec;
  rec.n = n;
  rec.a = a;

  // Value comparison scaled by den(a): value*den = e*den - (den-num)*tau.
  long long num = numerator(a).convert_to<long long>();
  long long den = denominator(a).convert_to<long long>();

  if (n <= 7) {
    LabeledScan scan(n);
    std::uint64_t total = 1ull << scan.pairs.size();
    struct Best {
      long long scaled = -1;
      std::uint64_t mask = 0;
    };
    unsigned chunks = workers > 1 ? workers * 4 : 1;
    std::vector<Best> bests(chunks);
    parallel_chunks(total, workers, chunks, [&](unsigned c, std::uint64_t lo, std::uint64_t hi) {
      Best local;
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        Graph g = scan.materialize(mask);
        if (find_clique(g, 4)) continue;
        TriangleCover cover = min_triangle_edge_cover(g);
        long long scaled =
            static_cast<long long>(g.edge_count()) * den - (den - num) * cover.size;
        if (scaled > local.scaled) {
          local.scaled = scaled;
          local.mask = mask;
        }
      }
      bests[c] = local;
    });
    Best overall;
    for (const Best& b : bests)
      if (b.scaled > overall.scaled) overall = b;  // chunk order breaks ties deterministically
    rec.max_value = Rational(overall.scaled, den);
    rec.witness_graph6 = to_graph6(scan.materialize(overall.mask));
    rec.method = "labeled";
    rec.exhaustive = true;
    return rec;
  }
  if (n == 8) {
    EnumerateOptions opt;
    opt.forbid_clique = 4;
    opt.workers = workers;
    auto reps = enumerate_nonisomorphic(8, opt);
    long long best_scaled = -1;
    const Graph* best_g = nullptr;
    for (const Graph& g : reps) {
      TriangleCover cover = min_triangle_edge_cover(g);
      long long scaled = g.edge_count() * den - (den - num) * cover.size;
      if (scaled > best_scaled) {
        best_scaled = scaled;
        best_g = &g;
      }
    }
    rec.max_value = Rational(best_scaled, den);
    rec.witness_graph6 = to_graph6(*best_g);
    rec.method = "canonical";
    rec.exhaustive = true;
    return rec;
  }
  return heuristic_heavy_free(n, a, seed);
}

ScanRecord extremal_chubby_scan(int n, unsigned workers, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("extremal_chubby_scan: n must be >= 1");
  ScanRecord rec;
  rec.n = n;
  rec.a = 0;

  if (n <= 7) {
    LabeledScan scan(n);
    std::uint64_t total = 1ull << scan.pairs.size();
    struct Best {
      long long scaled = -1;
      std::uint64_t mask = 0;
    };
    unsigned chunks = workers > 1 ? workers * 4 : 1;
    std::vector<Best> bests(chunks);
    parallel_chunks(total, workers, chunks, [&](unsigned c, std::uint64_t lo, std::uint64_t hi) {
      Best local;
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        Graph g = scan.materialize(mask);
        if (find_clique(g, 5)) continue;
        long long scaled = 0;
        int nn = g.vertex_count();
        static constexpr int kScaled[3] = {15, 12, 10};
        for (int u = 0; u < nn; ++u) {
          std::uint64_t higher = g.row_bits(u) >> (u + 1);
          for (std::uint64_t b = higher; b; b &= b - 1) {
            int v = u + 1 + __builtin_ctzll(b);
            scaled += kScaled[chubby_class(g, u, v)];
          }
        }
        if (scaled > local.scaled) {
          local.scaled = scaled;
          local.mask = mask;
        }
      }
      bests[c] = local;
    });
    Best overall;
    for (const Best& b : bests)
      if (b.scaled > overall.scaled) overall = b;
    rec.max_value = Rational(overall.scaled, 15);
    rec.witness_graph6 = to_graph6(scan.materialize(overall.mask));
    rec.method = "labeled";
    rec.exhaustive = true;
    return rec;
  }
  if (n == 8) {
    EnumerateOptions opt;
    opt.forbid_clique = 5;
    opt.workers = workers;
    auto reps = enumerate_nonisomorphic(8, opt);
    Rational best = -1;
    const Graph* best_g = nullptr;
    for (const Graph& g : reps) {
      Rational t = chubby_total_k5free(g);
      if (t > best) {
        best = t;
        best_g = &g;
      }
    }
    rec.max_value = best;
    rec.witness_graph6 = to_graph6(*best_g);
    rec.method = "canonical";
    rec.exhaustive = true;
    return rec;
  }
  return heuristic_chubby(n, seed);
}

namespace {

// Heuristic search planes for n beyond the exhaustive range: structured seeds
// (balanced multipartite shapes) plus random-deletion graphs with local
// edge additions. Lower bounds only, flagged.
std::vector<Graph> heuristic_seeds(int n, int forbid, CounterRng& rng) {
  std::vector<Graph> seeds;
  // balanced (forbid-1)-partite: the Turan shape
  {
    int parts = forbid - 1;
    std::vector<int> sizes(static_cast<std::size_t>(parts), n / parts);
    for (int i = 0; i < n % parts; ++i) ++sizes[static_cast<std::size_t>(i)];
    std::erase(sizes, 0);
    seeds.push_back(Graph::complete_multipartite(sizes));
  }
  // random graphs thinned to the forbidden-clique class
  for (int t = 0; t < 6; ++t) {
    Graph g = [&] {
      std::vector<std::pair<int, int>> es;
      double p = 0.3 + 0.1 * static_cast<double>(t);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng.unit() < p) es.emplace_back(u, v);
      return Graph(n, std::span<const std::pair<int, int>>(es));
    }();
    // delete edges of offending cliques until clean
    while (auto cl = find_clique(g, forbid)) {
      auto vs = cl->to_vector();
      std::vector<std::pair<int, int>> es;
      for (auto e : g.edges())
        if (!(e.first == vs[0] && e.second == vs[1])) es.push_back(e);
      g = Graph(n, std::span<const std::pair<int, int>>(es));
    }
    seeds.push_back(g);
  }
  return seeds;
}

Graph local_edge_additions(Graph g, int forbid, CounterRng& rng, int rounds) {
  int n = g.vertex_count();
  for (int r = 0; r < rounds; ++r) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v || g.adjacent(u, v)) continue;
    auto es = g.edges();
    es.emplace_back(std::min(u, v), std::max(u, v));
    Graph cand(n, std::span<const std::pair<int, int>>(es));
    if (!find_clique(cand, forbid)) g = cand;
  }
  return g;
}

// Greedy (not minimum) triangle cover size, uncapped; heuristic scans use it
// because e(g) - (1-a)*|greedy cover| is still a valid lower bound on the
// heavy-free optimum of g.
long long greedy_triangle_cover_size(const Graph& g) {
  int n = g.vertex_count();
  auto edges = g.edges();
  std::vector<std::vector<int>> edge_index(static_cast<std::size_t>(n),
                                           std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edge_index[static_cast<std::size_t>(edges[i].first)][static_cast<std::size_t>(
        edges[i].second)] = static_cast<int>(i);
    edge_index[static_cast<std::size_t>(edges[i].second)][static_cast<std::size_t>(
        edges[i].first)] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> tris_of_edge(edges.size());
  long long tri_total = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        int t = static_cast<int>(tri_total++);
        for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}})
          tris_of_edge[static_cast<std::size_t>(
                           edge_index[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])]
              .push_back(t);
      }
    }
  std::vector<bool> covered(static_cast<std::size_t>(tri_total), false);
  long long left = tri_total, size = 0;
  while (left > 0) {
    std::size_t best_e = 0, best_gain = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      std::size_t gain = 0;
      for (int t : tris_of_edge[e])
        if (!covered[static_cast<std::size_t>(t)]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best_e = e;
      }
    }
    ++size;
    for (int t : tris_of_edge[best_e])
      if (!covered[static_cast<std::size_t>(t)]) {
        covered[static_cast<std::size_t>(t)] = true;
        --left;
      }
  }
  return size;
}

ScanRecord heuristic_heavy_free(int n, const Rational& a, std::uint64_t seed) {
  ScanRecord rec;
  rec.n = n;
  rec.a = a;
  rec.method = "heuristic";
  rec.exhaustive = false;
  CounterRng rng(seed, 0xC0FFEE);
  Rational best = -1;
  for (Graph g : heuristic_seeds(n, 4, rng)) {
    g = local_edge_additions(g, 4, rng, 4 * n * n);
    Rational value =
        Rational(g.edge_count()) - (Rational(1) - a) * Rational(greedy_triangle_cover_size(g));
    if (value > best) {
      best = value;
      rec.witness_graph6 = to_graph6(g);
    }
  }
  rec.max_value = best;
  return rec;
}

ScanRecord heuristic_chubby(int n, std::uint64_t seed) {
  ScanRecord rec;
  rec.n = n;
  rec.a = 0;
  rec.method = "heuristic";
  rec.exhaustive = false;
  CounterRng rng(seed, 0xCAB00);
  Rational best = -1;
  for (Graph g : heuristic_seeds(n, 5, rng)) {
    g = local_edge_additions(g, 5, rng, 4 * n * n);
    Rational value = chubby_total_k5free(g);
    if (value > best) {
      best = value;
      rec.witness_graph6 = to_graph6(g);
    }
  }
  rec.max_value = best;
  return rec;
}

}  // namespace

nlohmann::json scan_record_json(const ScanRecord& rec) {
  return nlohmann::json{{"n", rec.n},
                        {"a_num", numerator(rec.a).str()},
                        {"a_den", denominator(rec.a).str()},
                        {"max_value_num", numerator(rec.max_value).str()},
                        {"max_value_den", denominator(rec.max_value).str()},
                        {"witness_graph6", rec.witness_graph6},
                        {"method", rec.method},
                        {"exhaustive", rec.exhaustive}};
}

nlohmann::json weight_assignment_json(const WeightAssignment& w) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    edges.push_back(nlohmann::json{{"u", w.edges[i].first},
                                   {"v", w.edges[i].second},
                                   {"weight", rational_json(w.weights[i])}});
  }
  return nlohmann::json{{"edges", edges}, {"total", rational_json(w.total)}};
}

}  // namespace extremal::weighting
