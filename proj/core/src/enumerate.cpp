#include "extremal/enumerate.hpp"

#include <map>
#include <mutex>

#include "extremal/canonical.hpp"
#include "extremal/clique.hpp"
#include "extremal/parallel.hpp"

namespace extremal {

namespace {

// Does parent + a new vertex adjacent to exactly `mask` satisfy the
// constraints? Parent is assumed valid (hereditary classes, so constraints
// hold inductively).
bool extension_ok(const Graph& parent, std::uint64_t mask, const EnumerateOptions& opt) {
  int k = parent.vertex_count();
  int newdeg = __builtin_popcountll(mask);
  if (opt.max_degree >= 0) {
    if (newdeg > opt.max_degree) return false;
    for (std::uint64_t b = mask; b; b &= b - 1)
      if (parent.degree(__builtin_ctzll(b)) + 1 > opt.max_degree) return false;
  }
  if (opt.min_degree_final >= 0 && opt.target_n > 0) {
    int slack = opt.target_n - (k + 1);  // vertices still to come
    if (newdeg + slack < opt.min_degree_final) return false;
    for (int v = 0; v < k; ++v) {
      int d = parent.degree(v) + (((mask >> v) & 1) ? 1 : 0);
      if (d + slack < opt.min_degree_final) return false;
    }
  }
  if (opt.forbid_clique >= 2) {
    // New cliques all contain the new vertex, i.e. a K_{s-1} inside mask.
    if (opt.forbid_clique == 2 && mask) return false;
    if (opt.forbid_clique == 3) {
      // Edge inside mask <=> triangle with the new vertex.
      for (std::uint64_t b = mask; b; b &= b - 1) {
        int v = __builtin_ctzll(b);
        if (parent.row_bits(v) & (mask & ~b)) return false;
      }
    } else if (opt.forbid_clique > 3) {
      Graph inside = parent.induced(VertexSet::from_bits(mask));
      if (find_clique(inside, opt.forbid_clique - 1)) return false;
    }
  }
  if (opt.alpha_max >= 1) {
    // New independent sets all contain the new vertex, so look for an
    // independent alpha_max-set among its non-neighbors.
    std::uint64_t nonnbrs = VertexSet::range(k).bits() & ~mask;
    Graph outside = parent.induced(VertexSet::from_bits(nonnbrs));
    if (find_independent_set(outside, opt.alpha_max)) return false;
  }
  return true;
}

Graph extend(const Graph& parent, std::uint64_t mask) {
  int k = parent.vertex_count();
  std::vector<std::pair<int, int>> edges = parent.edges();
  for (std::uint64_t b = mask; b; b &= b - 1) edges.emplace_back(__builtin_ctzll(b), k);
  return Graph(k + 1, std::span<const std::pair<int, int>>(edges));
}

}  // namespace

std::vector<Graph> extend_representatives(const std::vector<Graph>& level,
                                          const EnumerateOptions& opt) {
  if (level.empty()) return {};
  int k = level.front().vertex_count();
  for (const Graph& g : level)
    if (g.vertex_count() != k)
      throw PreconditionError("extend_representatives: mixed-order level");
  if (k + 1 > kMaxVertices)
    throw BudgetError("extend_representatives: level already at the vertex cap");

  unsigned workers = opt.workers ? opt.workers : 1;
  unsigned chunks = workers > 1 ? workers * 4 : 1;
  std::vector<std::map<std::string, Graph>> partial(chunks);

  parallel_chunks(level.size(), workers, chunks,
                  [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
                    auto& local = partial[chunk];
                    for (std::uint64_t p = lo; p < hi; ++p) {
                      const Graph& parent = level[p];
                      std::uint64_t top = 1ull << k;
                      for (std::uint64_t mask = 0; mask < top; ++mask) {
                        if (!extension_ok(parent, mask, opt)) continue;
                        Graph child = extend(parent, mask);
                        local.emplace(canonical_key(child), canonical_graph(child));
                      }
                    }
                  });

  std::map<std::string, Graph> merged;
  for (auto& m : partial)
    for (auto& [key, g] : m) merged.emplace(key, g);

  if (merged.size() > opt.max_reps_per_level)
    throw BudgetError("extend_representatives: level of " + std::to_string(merged.size()) +
                      " representatives exceeds the budget of " +
                      std::to_string(opt.max_reps_per_level));

  std::vector<Graph> out;
  out.reserve(merged.size());
  for (auto& [key, g] : merged) out.push_back(g);
  return out;
}

std::vector<Graph> enumerate_nonisomorphic(int n, const EnumerateOptions& opt) {
  if (n < 0 || n > kMaxVertices)
    throw PreconditionError("enumerate_nonisomorphic: order outside [0, 64]");
  if (n == 0) return {Graph(0)};
  std::vector<Graph> level{Graph(1)};
  if (opt.forbid_clique == 1)
    throw PreconditionError("enumerate_nonisomorphic: forbid_clique must be 0 or >= 2");
  for (int k = 1; k < n; ++k) level = extend_representatives(level, opt);
  return level;
}

}  // namespace extremal
