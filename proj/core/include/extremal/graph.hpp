#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "extremal/errors.hpp"
#include "extremal/rational.hpp"

namespace extremal {

// Hard vertex cap. One adjacency row fits in a machine word, which is what
// keeps the exhaustive searches (clique, canonical form, labeled scans) fast.
// The spec's exact-search limit defaults to the same value and can only be
// configured downward.
inline constexpr int kMaxVertices = 64;
inline constexpr int kDefaultExactSearchLimit = 64;

// Subset of {0, ..., 63} as a bit mask. Vertex sets, neighborhoods and
// clique witnesses all use this representation.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  static constexpr VertexSet from_bits(std::uint64_t b) { return VertexSet(b); }
  static constexpr VertexSet single(int v) { return VertexSet(1ull << v); }
  // {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    std::uint64_t b = 0;
    for (int v : vs) b |= 1ull << v;
    return VertexSet(b);
  }
  static VertexSet of_vector(const std::vector<int>& vs) {
    std::uint64_t b = 0;
    for (int v : vs) b |= 1ull << v;
    return VertexSet(b);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcountll(bits_); }
  int lowest() const { return __builtin_ctzll(bits_); }  // pre: non-empty
  int highest() const { return 63 - __builtin_clzll(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (1ull << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(1ull << v)); }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

  bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }

  template <class F>
  void for_each(F f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(__builtin_ctzll(b));
  }

 private:
  constexpr explicit VertexSet(std::uint64_t b) : bits_(b) {}
  std::uint64_t bits_ = 0;
};

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Derived graphs (complement, join, induced subgraph) are new values.
class Graph {
 public:
  // Edgeless graph.
  explicit Graph(int n) : n_(check_order(n)) { rows_.fill(0); }

  Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_unchecked(u, v);
  }
  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_unchecked(u, v);
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.rows_[v] = VertexSet::range(n).without(v).bits();
    return g;
  }
  static Graph cycle(int n);
  static Graph path(int n);
  // Parts of the given sizes, all cross edges present, parts independent.
  static Graph complete_multipartite(const std::vector<int>& part_sizes);

  int vertex_count() const { return n_; }
  long long edge_count() const;
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1; }
  std::uint64_t row_bits(int v) const { return rows_[v]; }
  VertexSet neighbors(int v) const { return VertexSet::from_bits(rows_[v]); }
  int degree(int v) const { return __builtin_popcountll(rows_[v]); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  // Lexicographic (u < v) edge list.
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;

  // Subgraph on `keep`, relabeled to 0..|keep|-1 preserving vertex order.
  Graph induced(VertexSet keep) const;

  // Disjoint union plus all cross edges, vertex blocks in argument order.
  static Graph join(std::span<const Graph> parts);
  static Graph join(const Graph& a, const Graph& b) {
    std::array<Graph, 2> p{a, b};
    return join(std::span<const Graph>(p));
  }

  // Replace each vertex by an independent class of the given size; classes
  // fully joined exactly when the originals were adjacent.
  Graph blowup(const std::vector<int>& class_sizes) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.rows_[v] != b.rows_[v]) return false;
    return true;
  }

  // {"n": n, "adj": [[neighbors of 0], [neighbors of 1], ...]}
  nlohmann::json adjacency_json() const;
  static Graph from_adjacency_json(const nlohmann::json& j);

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw PreconditionError("graph order " + std::to_string(n) + " outside [0, " +
                              std::to_string(kMaxVertices) + "]");
    return n;
  }
  void add_edge_unchecked(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
      throw PreconditionError("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    rows_[u] |= 1ull << v;
    rows_[v] |= 1ull << u;
  }

  int n_;
  std::array<std::uint64_t, kMaxVertices> rows_;
};

struct PairStats {
  long long a_size = 0;
  long long b_size = 0;
  long long cross_edges = 0;
  Rational density;  // cross_edges / (|A| |B|)
};

// Vertices of b adjacent to every vertex of a. a and b must be disjoint
// subsets of g's vertex range; empty a returns b (empty intersection
// convention).
VertexSet common_neighborhood(const Graph& g, VertexSet a, VertexSet b);

// min over ordered pairs (i != j) and v in parts[i] of |N(v) & parts[j]|.
// Parts must be pairwise disjoint and non-empty, and there must be >= 2.
int min_crossing_degree(const Graph& g, std::span<const VertexSet> parts);

// Cross-pair edge statistics; a, b disjoint and non-empty.
PairStats pair_density(const Graph& g, VertexSet a, VertexSet b);

void check_subset(const Graph& g, VertexSet s, const char* what);

}  // namespace extremal
