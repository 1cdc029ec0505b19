#pragma once

// Test-side oracles: independent, deliberately naive reimplementations used
// to cross-check the library. Nothing here may call the code path it is
// checking.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "extremal/graph.hpp"
#include "extremal/rational.hpp"
#include "extremal/rng.hpp"

namespace oracle {

using extremal::Graph;
using extremal::Rational;
using extremal::VertexSet;

// Largest clique by scanning every vertex subset. n <= 24 or so.
inline int clique_number_subsets(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t s = 0; s < (1ull << n); ++s) {
    int size = __builtin_popcountll(s);
    if (size <= best) continue;
    bool clique = true;
    for (std::uint64_t a = s; clique && a; a &= a - 1) {
      int u = __builtin_ctzll(a);
      // u must dominate every other member of s
      if ((g.row_bits(u) & s) != (s & ~(1ull << u))) clique = false;
    }
    if (clique) best = size;
  }
  return best;
}

inline int independence_number_subsets(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t s = 0; s < (1ull << n); ++s) {
    int size = __builtin_popcountll(s);
    if (size <= best) continue;
    bool indep = true;
    for (std::uint64_t a = s; indep && a; a &= a - 1) {
      int u = __builtin_ctzll(a);
      if (g.row_bits(u) & s & ~(1ull << u)) indep = false;
    }
    if (indep) best = size;
  }
  return best;
}

inline bool has_clique_subsets(const Graph& g, int k) {
  return clique_number_subsets(g) >= k;
}

// Independent graph6 encoder: assembles the bit vector explicitly, then
// packs. Only the <= 62 vertex header form (enough for cross-checks).
inline std::string encode_graph6_naive(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> bits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int val = 0;
    for (int j = 0; j < 6; ++j) val = val * 2 + bits[i + static_cast<std::size_t>(j)];
    out.push_back(static_cast<char>(val + 63));
  }
  return out;
}

// Exhaustive isomorphism test over all permutations. n <= 8.
inline bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; match && u < n; ++u)
      for (int v = u + 1; match && v < n; ++v)
        if (a.adjacent(u, v) !=
            b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
          match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Per-edge standard weight by scanning all subsets containing the edge.
// Returns the total scaled by 2*lcm convention-free: exact rational total.
inline Rational standard_total_subsets(const Graph& g) {
  int n = g.vertex_count();
  Rational total = 0;
  for (auto [u, v] : g.edges()) {
    int r = 2;
    for (std::uint64_t s = 0; s < (1ull << n); ++s) {
      if (!((s >> u) & 1) || !((s >> v) & 1)) continue;
      int size = __builtin_popcountll(s);
      if (size <= r) continue;
      bool clique = true;
      for (std::uint64_t a = s; clique && a; a &= a - 1) {
        int w = __builtin_ctzll(a);
        if ((g.row_bits(w) & s) != (s & ~(1ull << w))) clique = false;
      }
      if (clique) r = size;
    }
    total += Rational(r, 2 * (r - 1));
  }
  return total;
}

// Minimum triangle edge cover by scanning edge subsets in increasing size
// (via popcount filter). Exponential; keep n tiny.
inline int min_triangle_cover_subsets(const Graph& g) {
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  std::vector<std::array<int, 3>> triangles;
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))
          triangles.push_back({a, b, c});
  if (triangles.empty()) return 0;
  auto edge_index = [&](int u, int v) {
    for (int i = 0; i < m; ++i)
      if ((edges[static_cast<std::size_t>(i)].first == u &&
           edges[static_cast<std::size_t>(i)].second == v))
        return i;
    return -1;
  };
  std::vector<std::uint64_t> tri_edges;
  for (auto& t : triangles) {
    std::uint64_t mask = 0;
    mask |= 1ull << edge_index(t[0], t[1]);
    mask |= 1ull << edge_index(t[0], t[2]);
    mask |= 1ull << edge_index(t[1], t[2]);
    tri_edges.push_back(mask);
  }
  int best = m;
  for (std::uint64_t s = 0; s < (1ull << m); ++s) {
    if (__builtin_popcountll(s) >= best) continue;
    bool covers = true;
    for (auto mask : tri_edges)
      if (!(mask & s)) {
        covers = false;
        break;
      }
    if (covers) best = __builtin_popcountll(s);
  }
  return best;
}

// Max edge count over ALL labeled n-vertex graphs, bucketed by
// (clique number, independence number). cell[w][a] = -1 when no graph has
// that exact profile. One scan serves every (s, alpha_budget) query.
inline std::vector<std::vector<long long>> rt_profile_table(int n) {
  std::vector<std::vector<long long>> cell(static_cast<std::size_t>(n + 1),
                                           std::vector<long long>(n + 1, -1));
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pv;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pv.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    std::vector<std::pair<int, int>> es;
    for (std::uint64_t b = mask; b; b &= b - 1)
      es.push_back(pv[static_cast<std::size_t>(__builtin_ctzll(b))]);
    Graph g(n, std::span<const std::pair<int, int>>(es));
    int w = clique_number_subsets(g);
    int a = independence_number_subsets(g);
    long long e = __builtin_popcountll(mask);
    auto& c = cell[static_cast<std::size_t>(w)][static_cast<std::size_t>(a)];
    if (e > c) c = e;
  }
  return cell;
}

// RT(n, K_s, alpha_budget) from a profile table; -1 when infeasible.
inline long long rt_from_profile(const std::vector<std::vector<long long>>& cell, int s,
                                 int alpha_budget) {
  long long best = -1;
  int n = static_cast<int>(cell.size()) - 1;
  for (int w = 0; w < s && w <= n; ++w)
    for (int a = 0; a <= alpha_budget && a <= n; ++a)
      best = std::max(best, cell[static_cast<std::size_t>(w)][static_cast<std::size_t>(a)]);
  return best;
}

inline Graph random_graph(int n, double density, extremal::CounterRng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < density) edges.emplace_back(u, v);
  return Graph(n, std::span<const std::pair<int, int>>(edges));
}

// Pair regularity by enumerating EVERY subset pair (no extreme-prefix
// shortcut). Sides <= 10 or so. Size thresholds compared as exact rationals,
// so no ceiling arithmetic is shared with the library path.
inline bool pair_regular_subsets(const Graph& g, VertexSet a, VertexSet b,
                                 const Rational& eps) {
  const auto av = a.to_vector();
  const auto bv = b.to_vector();
  long long cross = 0;
  for (int u : av) cross += (g.neighbors(u) & b).count();
  const Rational d = Rational(cross) / (Rational(a.count()) * b.count());
  for (std::uint64_t ma = 1; ma < (1ull << av.size()); ++ma) {
    int ka = __builtin_popcountll(ma);
    if (Rational(ka) < eps * a.count()) continue;
    VertexSet aprime;
    for (std::uint64_t m = ma; m; m &= m - 1)
      aprime = aprime.with(av[static_cast<std::size_t>(__builtin_ctzll(m))]);
    for (std::uint64_t mb = 1; mb < (1ull << bv.size()); ++mb) {
      int kb = __builtin_popcountll(mb);
      if (Rational(kb) < eps * b.count()) continue;
      long long e = 0;
      for (std::uint64_t m = mb; m; m &= m - 1)
        e += (g.neighbors(bv[static_cast<std::size_t>(__builtin_ctzll(m))]) & aprime).count();
      Rational dev = Rational(e) / (Rational(ka) * kb) - d;
      if (dev > eps || dev < -eps) return false;
    }
  }
  return true;
}

// Random relabeling of g (Fisher-Yates on vertex labels).
inline Graph shuffled(const Graph& g, extremal::CounterRng& rng) {
  int n = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph(n, std::span<const std::pair<int, int>>(edges));
}

}  // namespace oracle
