#include "extremal/canonical.hpp"

#include <algorithm>

namespace extremal {

namespace {

// Searches permutations for the lexicographically largest column-major
// upper-triangle bitstring. Column k (the adjacency of perm[k] to
// perm[0..k-1], most significant bit first) is a k-bit integer; comparing
// columns in order compares the bitstring.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<std::uint64_t> best_col;  // best_col[k], k in [1, n)
  std::vector<int> best_perm;
  bool have_best = false;

  std::vector<std::uint64_t> cur_col;
  std::vector<int> perm;
  std::uint64_t chosen = 0;

  explicit CanonSearch(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        best_col(static_cast<std::size_t>(n), 0),
        best_perm(static_cast<std::size_t>(n), 0),
        cur_col(static_cast<std::size_t>(n), 0),
        perm(static_cast<std::size_t>(n), 0) {}

  std::uint64_t column_of(int v, int k) const {
    std::uint64_t c = 0;
    for (int j = 0; j < k; ++j) c = (c << 1) | (g.adjacent(perm[static_cast<std::size_t>(j)], v) ? 1u : 0u);
    return c;
  }

  // True while cur_col[1..k-1] matches best exactly; callers only descend
  // into subtrees that are >= best, so "not equal" means strictly greater.
  bool prefix_equals_best(int k) const {
    for (int j = 1; j < k; ++j)
      if (cur_col[static_cast<std::size_t>(j)] != best_col[static_cast<std::size_t>(j)]) return false;
    return true;
  }

  void commit_leaf() {
    if (have_best) {
      for (int j = 1; j < n; ++j) {
        if (cur_col[static_cast<std::size_t>(j)] > best_col[static_cast<std::size_t>(j)]) break;
        if (cur_col[static_cast<std::size_t>(j)] < best_col[static_cast<std::size_t>(j)]) return;
      }
    }
    best_col = cur_col;
    best_perm = perm;
    have_best = true;
  }

  void descend(int k) {
    if (k == n) {
      commit_leaf();
      return;
    }
    // Candidate columns at this level.
    struct Cand {
      int v;
      std::uint64_t col;
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      if (!((chosen >> v) & 1)) cands.push_back({v, column_of(v, k)});

    // Twin elimination: candidates whose rows agree outside {u, v} are
    // swappable by an automorphism fixing the prefix, so only the
    // lowest-index one needs exploring. This is what keeps highly symmetric
    // graphs (complete multipartite, blowups) cheap.
    std::vector<bool> dropped(cands.size(), false);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (dropped[i]) continue;
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        if (dropped[j] || cands[i].col != cands[j].col) continue;
        std::uint64_t mask = ~((1ull << cands[i].v) | (1ull << cands[j].v));
        if ((g.row_bits(cands[i].v) & mask) == (g.row_bits(cands[j].v) & mask)) dropped[j] = true;
      }
    }
    std::vector<Cand> kept;
    kept.reserve(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (!dropped[i]) kept.push_back(cands[i]);
    if (k == 0) {
      // No columns yet; lead with high degree so a strong incumbent forms
      // early. Heuristic only, exactness comes from the exhaustive search.
      std::stable_sort(kept.begin(), kept.end(), [this](const Cand& a, const Cand& b) {
        int da = g.degree(a.v), db = g.degree(b.v);
        if (da != db) return da > db;
        return a.v < b.v;
      });
    } else {
      std::stable_sort(kept.begin(), kept.end(), [](const Cand& a, const Cand& b) {
        if (a.col != b.col) return a.col > b.col;
        return a.v < b.v;
      });
    }

    for (const Cand& c : kept) {
      // Prune against the current best: while the prefix above ties best,
      // a smaller column can never recover.
      if (have_best && k >= 1 && prefix_equals_best(k) &&
          c.col < best_col[static_cast<std::size_t>(k)])
        continue;
      perm[static_cast<std::size_t>(k)] = c.v;
      if (k >= 1) cur_col[static_cast<std::size_t>(k)] = c.col;
      chosen |= 1ull << c.v;
      descend(k + 1);
      chosen &= ~(1ull << c.v);
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return g;
  CanonSearch search(g);
  search.descend(0);
  // best_perm maps position -> original vertex; rebuild in that order.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(search.best_perm[static_cast<std::size_t>(i)],
                     search.best_perm[static_cast<std::size_t>(j)]))
        edges.emplace_back(i, j);
  return Graph(n, std::span<const std::pair<int, int>>(edges));
}

std::string canonical_key(const Graph& g) {
  Graph c = canonical_graph(g);
  int n = c.vertex_count();
  std::string key;
  key.push_back(static_cast<char>(n));
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (c.adjacent(u, v) ? 1 : 0);
      if (++bits == 8) {
        key.push_back(static_cast<char>(acc));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) key.push_back(static_cast<char>(acc << (8 - bits)));
  return key;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace extremal
