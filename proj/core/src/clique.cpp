#include "extremal/clique.hpp"

#include <atomic>

#include "extremal/parallel.hpp"

namespace extremal {

namespace {

void check_limit(const Graph& g, const SearchOptions& opt, const char* what) {
  if (g.vertex_count() > opt.exact_limit)
    throw BudgetError(std::string(what) + ": order " + std::to_string(g.vertex_count()) +
                      " exceeds the exact-search limit of " + std::to_string(opt.exact_limit));
}

// Greedy coloring of `cand`. Fills order[]/color[] with vertices grouped by
// color class, colors ascending; returns the count. The color of a vertex is
// an upper bound on the largest clique inside cand that contains it and any
// earlier-ordered vertices only.
int color_sort(const Graph& g, std::uint64_t cand, int* order, int* color) {
  int cnt = 0, c = 0;
  std::uint64_t rest = cand;
  while (rest) {
    ++c;
    std::uint64_t q = rest;
    while (q) {
      int v = __builtin_ctzll(q);
      q &= ~g.row_bits(v) & ~(1ull << v);
      rest &= ~(1ull << v);
      order[cnt] = v;
      color[cnt] = c;
      ++cnt;
    }
  }
  return cnt;
}

struct ValueSearch {
  const Graph& g;
  std::atomic<int>& best;

  void expand(int depth, std::uint64_t cand) {
    int order[kMaxVertices], color[kMaxVertices];
    int cnt = color_sort(g, cand, order, color);
    if (cnt == 0) {
      int b = best.load(std::memory_order_relaxed);
      while (depth > b && !best.compare_exchange_weak(b, depth, std::memory_order_relaxed)) {
      }
      return;
    }
    std::uint64_t remaining = cand;
    for (int i = cnt - 1; i >= 0; --i) {
      if (depth + color[i] <= best.load(std::memory_order_relaxed)) return;
      int v = order[i];
      remaining &= ~(1ull << v);
      std::uint64_t next = remaining & g.row_bits(v);
      if (next)
        expand(depth + 1, next);
      else {
        int b = best.load(std::memory_order_relaxed);
        while (depth + 1 > b &&
               !best.compare_exchange_weak(b, depth + 1, std::memory_order_relaxed)) {
        }
      }
    }
  }
};

int clique_value(const Graph& g, unsigned workers) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  std::atomic<int> best{1};
  ValueSearch search{g, best};

  // Root ordering mirrors expand(): color classes over the full vertex set.
  int order[kMaxVertices], color[kMaxVertices];
  int cnt = color_sort(g, VertexSet::range(n).bits(), order, color);

  // Subproblem i: clique {order[i]} with candidates among earlier-ordered
  // vertices. These are independent, so they can be farmed out; the shared
  // monotone best makes the final value schedule-independent.
  std::uint64_t below = 0;
  std::vector<std::uint64_t> cands(static_cast<std::size_t>(cnt));
  for (int i = 0; i < cnt; ++i) {
    cands[static_cast<std::size_t>(i)] = below & g.row_bits(order[i]);
    below |= 1ull << order[i];
  }
  workers = workers ? workers : 1;
  parallel_chunks(static_cast<std::uint64_t>(cnt), workers, workers,
                  [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
                    for (std::uint64_t idx = lo; idx < hi; ++idx) {
                      // Process high-color roots first within each chunk.
                      int i = cnt - 1 - static_cast<int>(idx);
                      if (1 + color[i] <= best.load(std::memory_order_relaxed)) continue;
                      if (cands[static_cast<std::size_t>(i)])
                        search.expand(1, cands[static_cast<std::size_t>(i)]);
                    }
                  });
  return best.load();
}

// Lexicographically-first k-clique: combinations explored in lex order with a
// coloring bound, so the first hit is the smallest witness and absence is a
// completed search.
struct FindSearch {
  const Graph& g;
  int k;
  std::uint64_t found = 0;

  bool dfs(std::uint64_t cur, std::uint64_t cand, int need) {
    if (need == 0) {
      found = cur;
      return true;
    }
    if (__builtin_popcountll(cand) < need) return false;
    int order[kMaxVertices], color[kMaxVertices];
    int cnt = color_sort(g, cand, order, color);
    if (color[cnt - 1] < need) return false;
    std::uint64_t rest = cand;
    while (rest) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      // Only vertices above v stay eligible, keeping enumeration lexicographic.
      if (dfs(cur | (1ull << v), rest & g.row_bits(v), need - 1)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, int k, const SearchOptions& opt) {
  check_limit(g, opt, "find_clique");
  if (k < 1) throw PreconditionError("find_clique: k must be >= 1");
  if (k > g.vertex_count()) return std::nullopt;
  FindSearch fs{g, k};
  if (!fs.dfs(0, g.vertices().bits(), k)) return std::nullopt;
  return VertexSet::from_bits(fs.found);
}

int clique_number(const Graph& g, const SearchOptions& opt) {
  check_limit(g, opt, "clique_number");
  return clique_value(g, opt.workers);
}

MaxCliqueResult max_clique(const Graph& g, const SearchOptions& opt) {
  check_limit(g, opt, "max_clique");
  MaxCliqueResult r;
  r.size = clique_value(g, opt.workers);
  if (r.size > 0) {
    auto w = find_clique(g, r.size, opt);
    r.witness = *w;  // must exist: size came from a complete search
  }
  return r;
}

int independence_number(const Graph& g, const SearchOptions& opt) {
  check_limit(g, opt, "independence_number");
  return clique_value(g.complement(), opt.workers);
}

MaxCliqueResult max_independent_set(const Graph& g, const SearchOptions& opt) {
  check_limit(g, opt, "max_independent_set");
  return max_clique(g.complement(), opt);
}

std::optional<VertexSet> find_independent_set(const Graph& g, int k, const SearchOptions& opt) {
  check_limit(g, opt, "find_independent_set");
  return find_clique(g.complement(), k, opt);
}

int clique_number_within(const Graph& g, VertexSet sub) {
  check_subset(g, sub, "clique_number_within");
  if (sub.empty()) return 0;
  std::atomic<int> best{1};
  ValueSearch search{g, best};
  int order[kMaxVertices], color[kMaxVertices];
  int cnt = color_sort(g, sub.bits(), order, color);
  std::uint64_t below = 0;
  for (int i = 0; i < cnt; ++i) below |= 1ull << order[i];
  std::uint64_t remaining = below;
  for (int i = cnt - 1; i >= 0; --i) {
    if (1 + color[i] <= best.load(std::memory_order_relaxed)) break;
    int v = order[i];
    remaining &= ~(1ull << v);
    std::uint64_t next = remaining & g.row_bits(v);
    if (next) search.expand(1, next);
  }
  return best.load();
}

}  // namespace extremal
