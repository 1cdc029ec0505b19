#include "extremal/regularity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "extremal/errors.hpp"
#include "extremal/parallel.hpp"
#include "extremal/rng.hpp"

namespace extremal::regularity {

namespace {

long long ceil_ll(const Rational& r) {
  long long f = floor_ll(r);
  return Rational(f) == r ? f : f + 1;
}

Rational parse_fraction(const std::string& s) {
  auto r = parse_rational(s);
  if (!r) throw PreconditionError("bad rational literal: " + s);
  return *r;
}

// Subset of `from` of the given size via partial Fisher-Yates; consumes rng.
VertexSet draw_subset(std::vector<int> from, int size, CounterRng& rng) {
  VertexSet out;
  for (int i = 0; i < size; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(from.size() - i));
    std::swap(from[i], from[j]);
    out = out.with(from[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Partitions

void check_partition(const Graph& g, const std::vector<VertexSet>& parts) {
  if (parts.empty()) throw PreconditionError("partition has no parts");
  VertexSet seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty())
      throw PreconditionError("partition part " + std::to_string(i) + " is empty");
    if (!(seen & parts[i]).empty())
      throw PreconditionError("partition part " + std::to_string(i) +
                              " overlaps an earlier part");
    seen = seen | parts[i];
  }
  if (!(seen == g.vertices()))
    throw PreconditionError("partition does not cover the vertex set");
}

bool is_equipartition(const std::vector<VertexSet>& parts) {
  int lo = kMaxVertices + 1, hi = 0;
  for (const auto& p : parts) {
    lo = std::min(lo, p.count());
    hi = std::max(hi, p.count());
  }
  return !parts.empty() && hi - lo <= 1;
}

std::vector<VertexSet> random_equipartition(const Graph& g, int m,
                                            std::uint64_t seed) {
  int n = g.vertex_count();
  if (m < 1 || m > n)
    throw PreconditionError("part count must be in [1, n], got " +
                            std::to_string(m));
  std::vector<int> verts(static_cast<std::size_t>(n));
  std::iota(verts.begin(), verts.end(), 0);
  CounterRng rng(seed);
  for (int i = 0; i < n - 1; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(verts.size() - i));
    std::swap(verts[i], verts[j]);
  }
  std::vector<VertexSet> parts(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i)
    parts[static_cast<std::size_t>(i % m)] =
        parts[static_cast<std::size_t>(i % m)].with(verts[i]);
  return parts;
}

std::vector<VertexSet> partition_from_json(const Graph& g,
                                           const nlohmann::json& j) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(g.vertex_count()))
    throw PreconditionError("partition json must list one part index per vertex");
  int m = 0;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<int>() < 0)
      throw PreconditionError("part indices must be non-negative integers");
    m = std::max(m, e.get<int>() + 1);
  }
  std::vector<VertexSet> parts(static_cast<std::size_t>(m));
  for (int v = 0; v < g.vertex_count(); ++v)
    parts[j[static_cast<std::size_t>(v)].get<std::size_t>()] =
        parts[j[static_cast<std::size_t>(v)].get<std::size_t>()].with(v);
  check_partition(g, parts);
  return parts;
}

nlohmann::json partition_json(const Graph& g,
                              const std::vector<VertexSet>& parts) {
  check_partition(g, parts);
  std::vector<int> idx(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    parts[i].for_each([&](int v) { idx[static_cast<std::size_t>(v)] = static_cast<int>(i); });
  return nlohmann::json(idx);
}

// ---------------------------------------------------------------------------
// Pair regularity

namespace {

constexpr int kExhaustivePairCap = 14;

struct Violation {
  std::uint64_t rank;  // enumeration position, for first-in-order merging
  VertexSet a, b;
};

// For one A', extreme same-size B' choices bound the density of every other
// same-size B', so checking the two extremes per size covers all subsets.
void scan_one_side(const Graph& g, VertexSet aprime,
                   const std::vector<int>& bverts, long long b_min,
                   const Rational& lo, const Rational& hi, long long& checked,
                   std::optional<std::pair<VertexSet, VertexSet>>& hit) {
  long long a_size = aprime.count();
  std::vector<int> order(bverts.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(bverts.size());
  for (std::size_t i = 0; i < bverts.size(); ++i)
    deg[i] = (g.neighbors(bverts[i]) & aprime).count();
  // descending degree, ties by vertex order
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return deg[static_cast<std::size_t>(x)] >
                                              deg[static_cast<std::size_t>(y)]; });
  long long top = 0, bottom = 0;
  std::vector<long long> top_sum(order.size() + 1), bot_sum(order.size() + 1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    top += deg[static_cast<std::size_t>(order[i])];
    bottom += deg[static_cast<std::size_t>(order[order.size() - 1 - i])];
    top_sum[i + 1] = top;
    bot_sum[i + 1] = bottom;
  }
  auto prefix_set = [&](std::size_t count, bool from_top) {
    VertexSet s;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t at = from_top ? i : order.size() - 1 - i;
      s = s.with(bverts[static_cast<std::size_t>(order[at])]);
    }
    return s;
  };
  for (long long s = b_min; s <= static_cast<long long>(order.size()); ++s) {
    checked += 2;
    if (ratio(top_sum[static_cast<std::size_t>(s)], a_size * s) > hi) {
      hit = {aprime, prefix_set(static_cast<std::size_t>(s), true)};
      return;
    }
    if (ratio(bot_sum[static_cast<std::size_t>(s)], a_size * s) < lo) {
      hit = {aprime, prefix_set(static_cast<std::size_t>(s), false)};
      return;
    }
  }
}

PairCertificate certify_exhaustive(const Graph& g, VertexSet a, VertexSet b,
                                   const Rational& eps,
                                   const CertifyOptions& opt) {
  PairCertificate cert;
  cert.exact = true;
  cert.density = pair_density(g, a, b).density;
  const auto averts = a.to_vector();
  const auto bverts = b.to_vector();
  long long a_min = ceil_ll(eps * a.count());
  long long b_min = ceil_ll(eps * b.count());
  if (a_min > a.count() || b_min > b.count()) {
    cert.regular = true;  // no qualifying subsets at all
    return cert;
  }
  const Rational lo = cert.density - eps, hi = cert.density + eps;
  const std::uint64_t total = 1ull << averts.size();
  unsigned workers = resolve_workers(opt.workers);
  unsigned chunks = workers > 1 ? workers * 8 : 1;
  std::vector<std::optional<Violation>> found(chunks);
  std::vector<long long> counts(chunks);
  parallel_chunks(total, workers, chunks, [&](unsigned chunk, std::uint64_t begin,
                                              std::uint64_t end) {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      if (static_cast<long long>(__builtin_popcountll(mask)) < a_min) continue;
      VertexSet aprime;
      for (std::uint64_t m = mask; m; m &= m - 1)
        aprime = aprime.with(averts[static_cast<std::size_t>(__builtin_ctzll(m))]);
      std::optional<std::pair<VertexSet, VertexSet>> hit;
      scan_one_side(g, aprime, bverts, b_min, lo, hi, counts[chunk], hit);
      if (hit && !found[chunk]) found[chunk] = Violation{mask, hit->first, hit->second};
    }
  });
  for (unsigned c = 0; c < chunks; ++c) cert.checked += counts[c];
  // chunks carve the mask range in order, so the first chunk's hit is the
  // first violation in enumeration order
  for (unsigned c = 0; c < chunks && !cert.violation; ++c)
    if (found[c]) cert.violation = {found[c]->a, found[c]->b};
  cert.regular = !cert.violation.has_value();
  return cert;
}

PairCertificate certify_sampled(const Graph& g, VertexSet a, VertexSet b,
                                const Rational& eps,
                                const CertifyOptions& opt) {
  if (opt.samples < 1)
    throw PreconditionError("sample count must be positive");
  PairCertificate cert;
  cert.exact = false;
  cert.density = pair_density(g, a, b).density;
  const auto averts = a.to_vector();
  const auto bverts = b.to_vector();
  const long long a_min = ceil_ll(eps * a.count());
  const long long b_min = ceil_ll(eps * b.count());
  if (a_min > a.count() || b_min > b.count()) {
    cert.regular = true;
    cert.exact = true;  // vacuous, hence settled
    return cert;
  }
  const Rational lo = cert.density - eps, hi = cert.density + eps;
  const long long a_span = a.count() - a_min + 1;
  const long long b_span = b.count() - b_min + 1;
  unsigned workers = resolve_workers(opt.workers);
  unsigned chunks = workers > 1 ? workers * 8 : 1;
  std::vector<std::optional<Violation>> found(chunks);
  parallel_chunks(static_cast<std::uint64_t>(opt.samples), workers, chunks,
                  [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t draw = begin; draw < end; ++draw) {
      CounterRng rng(opt.seed);
      CounterRng dr = rng.fork(draw);
      // even draws pin the threshold sizes, odd draws roam the full range
      long long sa = a_min, sb = b_min;
      if (draw % 2 == 1) {
        sa = a_min + static_cast<long long>(dr.below(static_cast<std::uint64_t>(a_span)));
        sb = b_min + static_cast<long long>(dr.below(static_cast<std::uint64_t>(b_span)));
      }
      VertexSet aprime = draw_subset(averts, static_cast<int>(sa), dr);
      VertexSet bprime = draw_subset(bverts, static_cast<int>(sb), dr);
      Rational d = pair_density(g, aprime, bprime).density;
      if (d > hi || d < lo) {
        if (!found[chunk] || draw < found[chunk]->rank)
          found[chunk] = Violation{draw, aprime, bprime};
      }
    }
  });
  cert.checked = opt.samples;
  std::optional<Violation> best;
  for (unsigned c = 0; c < chunks; ++c)
    if (found[c] && (!best || found[c]->rank < best->rank)) best = found[c];
  if (best) cert.violation = {best->a, best->b};
  cert.regular = !cert.violation.has_value();
  return cert;
}

}  // namespace

PairCertificate check_pair_regular(const Graph& g, VertexSet a, VertexSet b,
                                   const Rational& eps,
                                   const CertifyOptions& opt) {
  check_subset(g, a, "side A");
  check_subset(g, b, "side B");
  if (a.empty() || b.empty())
    throw PreconditionError("pair sides must be non-empty");
  if (!(a & b).empty())
    throw PreconditionError("pair sides must be disjoint");
  if (!(eps > 0)) throw PreconditionError("eps must be positive");
  if (opt.mode == CertMode::exhaustive) {
    if (a.count() > kExhaustivePairCap || b.count() > kExhaustivePairCap)
      throw BudgetError("exhaustive pair check limited to sides of size " +
                        std::to_string(kExhaustivePairCap) +
                        "; use sampled certification above that");
    return certify_exhaustive(g, a, b, eps, opt);
  }
  return certify_sampled(g, a, b, eps, opt);
}

// ---------------------------------------------------------------------------
// Slicing

SlicedParams slicing_params(const Rational& eps, const Rational& gamma,
                            const Rational& alpha) {
  if (!(eps > 0)) throw PreconditionError("eps must be positive");
  if (!(eps < alpha))
    throw PreconditionError("eps must be below the slice fraction alpha");
  if (!(alpha <= 1)) throw PreconditionError("alpha must be at most 1");
  if (!(eps < gamma)) throw PreconditionError("eps must be below gamma");
  if (!(eps < ratio(1, 2))) throw PreconditionError("eps must be below 1/2");
  SlicedParams out;
  Rational stretched = eps / alpha, doubled = 2 * eps;
  out.eps_prime = std::max(stretched, doubled);
  out.gamma_minus_eps = gamma - eps;
  return out;
}

// ---------------------------------------------------------------------------
// Cluster graph

Graph ClusterGraph::skeleton() const {
  Graph out(m);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (regular[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
          density[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >= gamma)
        edges.emplace_back(i, j);
  return Graph(m, std::span<const std::pair<int, int>>(edges));
}

namespace {

ClusterGraph blank_cluster(int m, const Rational& eps, const Rational& gamma) {
  if (m < 1 || m > kMaxVertices)
    throw PreconditionError("cluster order must be in [1, 64], got " +
                            std::to_string(m));
  ClusterGraph r;
  r.m = m;
  r.epsilon = eps;
  r.gamma = gamma;
  r.density.assign(static_cast<std::size_t>(m),
                   std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
  r.regular.assign(static_cast<std::size_t>(m),
                   std::vector<bool>(static_cast<std::size_t>(m), false));
  return r;
}

}  // namespace

ClusterGraph cluster_from_pairs(
    int m, const std::vector<std::tuple<int, int, Rational>>& pairs,
    const Rational& eps, const Rational& gamma) {
  ClusterGraph r = blank_cluster(m, eps, gamma);
  for (const auto& [i, j, d] : pairs) {
    if (i < 0 || j < 0 || i >= m || j >= m || i == j)
      throw PreconditionError("cluster pair indices out of range");
    if (d < 0 || d > 1)
      throw PreconditionError("pair density must lie in [0, 1]");
    if (r.regular[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
      throw PreconditionError("cluster pair listed twice");
    r.density[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d;
    r.density[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = d;
    r.regular[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    r.regular[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
  }
  return r;
}

ClusterGraph build_cluster_graph(const Graph& g,
                                 const std::vector<VertexSet>& parts,
                                 const Rational& eps, const Rational& gamma,
                                 const CertifyOptions& opt) {
  check_partition(g, parts);
  if (gamma < 0 || gamma > 1)
    throw PreconditionError("gamma must lie in [0, 1]");
  ClusterGraph r = blank_cluster(static_cast<int>(parts.size()), eps, gamma);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      PairCertificate cert = check_pair_regular(g, parts[i], parts[j], eps, opt);
      r.density[i][j] = r.density[j][i] = cert.density;
      r.regular[i][j] = r.regular[j][i] = cert.regular;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Dense patterns

std::vector<VertexSet> detect_heavy_triangles(const ClusterGraph& r,
                                              const Rational& threshold,
                                              const Rational& gamma) {
  Graph skel = r.skeleton();
  Rational dense = threshold + gamma;
  auto at = [&](int i, int j) {
    return r.density[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  std::vector<VertexSet> out;
  for (int i = 0; i < r.m; ++i)
    for (int j = i + 1; j < r.m; ++j)
      for (int k = j + 1; k < r.m; ++k) {
        if (!(skel.adjacent(i, j) && skel.adjacent(i, k) && skel.adjacent(j, k)))
          continue;
        if (at(i, j) >= dense && at(i, k) >= dense && at(j, k) >= dense)
          out.push_back(VertexSet::of({i, j, k}));
      }
  return out;
}

std::vector<VertexSet> detect_chubby(const ClusterGraph& r,
                                     const Rational& threshold,
                                     const Rational& gamma, int clique_order) {
  if (clique_order != 3 && clique_order != 4)
    throw PreconditionError("chubby scan handles orders 3 and 4 only");
  Graph skel = r.skeleton();
  Rational dense = threshold + gamma;
  auto at = [&](int i, int j) {
    return r.density[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  std::vector<VertexSet> out;
  auto consider = [&](const std::vector<int>& vs) {
    for (std::size_t x = 0; x < vs.size(); ++x)
      for (std::size_t y = x + 1; y < vs.size(); ++y) {
        if (!skel.adjacent(vs[x], vs[y])) return;
      }
    for (std::size_t x = 0; x < vs.size(); ++x)
      for (std::size_t y = x + 1; y < vs.size(); ++y)
        if (at(vs[x], vs[y]) >= dense) {
          out.push_back(VertexSet::of_vector(vs));
          return;
        }
  };
  if (clique_order == 3) {
    for (int i = 0; i < r.m; ++i)
      for (int j = i + 1; j < r.m; ++j)
        for (int k = j + 1; k < r.m; ++k) consider({i, j, k});
  } else {
    for (int i = 0; i < r.m; ++i)
      for (int j = i + 1; j < r.m; ++j)
        for (int k = j + 1; k < r.m; ++k)
          for (int l = k + 1; l < r.m; ++l) consider({i, j, k, l});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Edge accounting

ResidualBound residual_edge_bound(long long n, int m, const Rational& eps,
                                  const Rational& gamma) {
  if (m < 1) throw PreconditionError("part count must be positive");
  if (n < m) throw PreconditionError("order must be at least the part count");
  if (eps < 0 || gamma < 0)
    throw PreconditionError("eps and gamma must be non-negative");
  ResidualBound out;
  Rational s = ratio(n, m);  // exact part size of an even equipartition
  Rational n2 = Rational(n) * n;
  out.exact_sum = eps * m * m * s * s                       // irregular pairs
                  + gamma / 2 * s * s * (m * (m - 1ll) / 2)  // sparse pairs
                  + s * (s - 1) / 2 * m;                     // inside parts
  out.relaxed_bound = eps * n2 + gamma / 4 * n2 + n2 / (2 * m);
  out.gamma_third = gamma / 3 * n2;
  out.chain_ok = out.exact_sum <= out.relaxed_bound;
  out.gamma_third_ok = out.relaxed_bound <= out.gamma_third;
  return out;
}

EdgeSplit edge_decomposition(const Graph& g,
                             const std::vector<VertexSet>& parts,
                             const ClusterGraph& r) {
  check_partition(g, parts);
  if (static_cast<int>(parts.size()) != r.m)
    throw PreconditionError("partition size does not match the cluster order");
  std::vector<int> part_of(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    parts[i].for_each([&](int v) { part_of[static_cast<std::size_t>(v)] = static_cast<int>(i); });
  Graph skel = r.skeleton();
  EdgeSplit out;
  for (auto [u, v] : g.edges()) {
    int pu = part_of[static_cast<std::size_t>(u)];
    int pv = part_of[static_cast<std::size_t>(v)];
    if (pu != pv && skel.adjacent(pu, pv))
      ++out.cluster_edges;
    else
      ++out.residual_edges;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Clique lifting

namespace {

// Size-p cliques inside pool in ascending lexicographic vertex order. cb
// returns true to stop the walk; the return value propagates the stop.
bool for_each_p_clique(const Graph& g, VertexSet pool, int p, VertexSet cur,
                       const std::function<bool(VertexSet)>& cb) {
  if (p == 0) return cb(cur);
  for (int v : pool.to_vector()) {
    VertexSet next = pool & g.neighbors(v) &
                     VertexSet::from_bits(~((2ull << v) - 1ull));
    if (next.count() < p - 1 && p > 1) continue;
    if (for_each_p_clique(g, next, p - 1, cur.with(v), cb)) return true;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> lift_clique(const Graph& g,
                                     const std::vector<VertexSet>& parts,
                                     const ClusterGraph& r,
                                     VertexSet cluster_clique, int p,
                                     const LiftOptions& opt) {
  check_partition(g, parts);
  if (static_cast<int>(parts.size()) != r.m)
    throw PreconditionError("partition size does not match the cluster order");
  if (p < 1) throw PreconditionError("per-part clique size must be positive");
  if (cluster_clique.empty())
    throw PreconditionError("cluster clique must be non-empty");
  if (!cluster_clique.subset_of(VertexSet::range(r.m)))
    throw PreconditionError("cluster clique names a missing cluster vertex");
  Graph skel = r.skeleton();
  const auto order = cluster_clique.to_vector();
  for (std::size_t x = 0; x < order.size(); ++x)
    for (std::size_t y = x + 1; y < order.size(); ++y)
      if (!skel.adjacent(order[x], order[y]))
        throw PreconditionError("cluster set is not a clique of the cluster graph");

  long long budget = opt.node_budget;
  std::optional<VertexSet> found;
  // Depth = position in the part order; allowed = common neighborhood of all
  // picks so far. Returns true to stop (success or exhausted budget).
  std::function<bool(std::size_t, VertexSet, VertexSet)> go =
      [&](std::size_t level, VertexSet allowed, VertexSet chosen) -> bool {
    if (level == order.size()) {
      found = chosen;
      return true;
    }
    VertexSet pool = allowed & parts[static_cast<std::size_t>(order[level])];
    return for_each_p_clique(g, pool, p, VertexSet(), [&](VertexSet kp) {
      if (--budget < 0) return true;
      VertexSet next = allowed;
      kp.for_each([&](int v) { next = next & g.neighbors(v); });
      return go(level + 1, next, chosen | kp);
    });
  };
  go(0, g.vertices(), VertexSet());
  return found;
}

// ---------------------------------------------------------------------------
// Crossing-degree cleanup

PruneReport prune_low_crossing_degree(const Graph& g,
                                      std::vector<VertexSet> parts,
                                      const Rational& floor_fraction) {
  check_partition(g, parts);
  if (parts.size() < 2)
    throw PreconditionError("need at least two parts to measure crossing degree");
  if (floor_fraction < 0)
    throw PreconditionError("floor fraction must be non-negative");
  PruneReport out;
  for (;;) {
    // worst margin = min over (v in part i, j != i) of deg_j(v) - frac |P_j|
    bool have = false;
    Rational worst;
    int victim = -1;
    std::size_t victim_part = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (int v : parts[i].to_vector()) {
        for (std::size_t j = 0; j < parts.size(); ++j) {
          if (j == i) continue;
          Rational margin = Rational((g.neighbors(v) & parts[j]).count()) -
                            floor_fraction * parts[j].count();
          if (!have || margin < worst ||
              (margin == worst && victim >= 0 && v < victim)) {
            have = true;
            worst = margin;
            victim = v;
            victim_part = i;
          }
        }
      }
    }
    if (!have || worst >= 0) {
      out.floor_met = true;
      break;
    }
    parts[victim_part] = parts[victim_part].without(victim);
    out.deleted.push_back(victim);
    if (parts[victim_part].empty()) {
      out.floor_met = false;
      break;
    }
  }
  out.parts = std::move(parts);
  return out;
}

// ---------------------------------------------------------------------------
// Parameter hierarchy

HierarchyReport validate_hierarchy(const ParamHierarchy& h) {
  if (!(h.gap > 0)) throw PreconditionError("gap must be positive");
  auto much_less = [&](const Rational& x, const Rational& y) {
    return x <= y / h.gap;
  };
  HierarchyReport rep;
  rep.links.push_back({"0 < 1/n0", h.n0 > 0});
  rep.links.push_back({"1/n0 <= 1/n", h.n > 0 && h.n0 > 0 && h.n <= h.n0});
  rep.links.push_back({"1/n << delta", h.n > 0 && much_less(ratio(1, h.n), h.delta)});
  rep.links.push_back(
      {"delta < 1/m'", h.m_prime > 0 && h.delta < ratio(1, h.m_prime)});
  rep.links.push_back(
      {"1/m' << eps", h.m_prime > 0 && much_less(ratio(1, h.m_prime), h.epsilon)});
  rep.links.push_back({"eps << gamma", much_less(h.epsilon, h.gamma)});
  rep.links.push_back({"gamma << 1", much_less(h.gamma, Rational(1))});
  rep.ok = std::all_of(rep.links.begin(), rep.links.end(),
                       [](const HierarchyLink& l) { return l.ok; });
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json cluster_graph_json(const ClusterGraph& r) {
  nlohmann::json dens = nlohmann::json::array();
  nlohmann::json reg = nlohmann::json::array();
  for (int i = 0; i < r.m; ++i) {
    nlohmann::json drow = nlohmann::json::array();
    nlohmann::json rrow = nlohmann::json::array();
    for (int j = 0; j < r.m; ++j) {
      drow.push_back(fraction_string(
          r.density[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      rrow.push_back(static_cast<bool>(
          r.regular[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
    dens.push_back(drow);
    reg.push_back(rrow);
  }
  return {{"m", r.m},
          {"epsilon", fraction_string(r.epsilon)},
          {"gamma", fraction_string(r.gamma)},
          {"density", dens},
          {"regular", reg}};
}

ClusterGraph cluster_graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m"))
    throw PreconditionError("cluster json must be an object with field m");
  int m = j.at("m").get<int>();
  ClusterGraph r = blank_cluster(m, parse_fraction(j.at("epsilon").get<std::string>()),
                                 parse_fraction(j.at("gamma").get<std::string>()));
  const auto& dens = j.at("density");
  const auto& reg = j.at("regular");
  if (!dens.is_array() || !reg.is_array() ||
      dens.size() != static_cast<std::size_t>(m) ||
      reg.size() != static_cast<std::size_t>(m))
    throw PreconditionError("cluster json matrices must be m x m");
  for (int i = 0; i < m; ++i) {
    if (dens[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(m) ||
        reg[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(m))
      throw PreconditionError("cluster json matrices must be m x m");
    for (int k = 0; k < m; ++k) {
      r.density[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          parse_fraction(dens[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]
                             .get<std::string>());
      r.regular[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          reg[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get<bool>();
    }
  }
  for (int i = 0; i < m; ++i) {
    if (r.density[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0 ||
        r.regular[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)])
      throw PreconditionError("cluster json diagonal must be empty");
    for (int k = 0; k < m; ++k)
      if (r.density[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] !=
              r.density[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] ||
          r.regular[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] !=
              r.regular[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)])
        throw PreconditionError("cluster json matrices must be symmetric");
  }
  return r;
}

nlohmann::json pair_certificate_json(const PairCertificate& c) {
  nlohmann::json j{{"regular", c.regular},
                   {"exact", c.exact},
                   {"density", fraction_string(c.density)},
                   {"checked", c.checked}};
  if (c.violation) {
    j["violation"] = {{"a", c.violation->first.to_vector()},
                      {"b", c.violation->second.to_vector()}};
  }
  return j;
}

nlohmann::json residual_bound_json(const ResidualBound& b) {
  return {{"exact_sum", fraction_string(b.exact_sum)},
          {"relaxed_bound", fraction_string(b.relaxed_bound)},
          {"gamma_third", fraction_string(b.gamma_third)},
          {"chain_ok", b.chain_ok},
          {"gamma_third_ok", b.gamma_third_ok}};
}

nlohmann::json edge_split_json(const EdgeSplit& s) {
  return {{"cluster_edges", s.cluster_edges}, {"residual_edges", s.residual_edges}};
}

nlohmann::json prune_report_json(const PruneReport& r) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : r.parts) parts.push_back(p.to_vector());
  return {{"parts", parts}, {"deleted", r.deleted}, {"floor_met", r.floor_met}};
}

nlohmann::json hierarchy_report_json(const HierarchyReport& r) {
  nlohmann::json links = nlohmann::json::array();
  for (const auto& l : r.links) links.push_back({{"name", l.name}, {"ok", l.ok}});
  return {{"ok", r.ok}, {"links", links}};
}

}  // namespace extremal::regularity
