#include "extremal/graph.hpp"

#include <numeric>

namespace extremal {

Graph Graph::cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs >= 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge_unchecked(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge_unchecked(v, v + 1);
  return g;
}

Graph Graph::complete_multipartite(const std::vector<int>& part_sizes) {
  int n = 0;
  for (int s : part_sizes) {
    if (s <= 0) throw PreconditionError("complete_multipartite: parts must be non-empty");
    n += s;
  }
  Graph g(n);
  int offset = 0;
  std::uint64_t all = VertexSet::range(n).bits();
  for (int s : part_sizes) {
    std::uint64_t part = (VertexSet::range(offset + s).bits()) ^ VertexSet::range(offset).bits();
    for (int v = offset; v < offset + s; ++v) g.rows_[v] = all & ~part;
    offset += s;
  }
  return g;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = rows_[u] >> (u + 1);
    for (std::uint64_t b = higher; b; b &= b - 1)
      out.emplace_back(u, u + 1 + __builtin_ctzll(b));
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  std::uint64_t all = VertexSet::range(n_).bits();
  for (int v = 0; v < n_; ++v) g.rows_[v] = all & ~rows_[v] & ~(1ull << v);
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  check_subset(*this, keep, "induced");
  std::vector<int> verts = keep.to_vector();
  Graph g(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (adjacent(verts[i], verts[j]))
        g.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph Graph::join(std::span<const Graph> parts) {
  int n = 0;
  for (const Graph& p : parts) n += p.vertex_count();
  if (n > kMaxVertices)
    throw PreconditionError("join result order " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxVertices));
  Graph g(n);
  std::uint64_t all = VertexSet::range(n).bits();
  int offset = 0;
  for (const Graph& p : parts) {
    int pn = p.vertex_count();
    std::uint64_t block =
        VertexSet::range(offset + pn).bits() ^ VertexSet::range(offset).bits();
    for (int v = 0; v < pn; ++v)
      g.rows_[offset + v] = (p.rows_[v] << offset) | (all & ~block);
    offset += pn;
  }
  return g;
}

Graph Graph::blowup(const std::vector<int>& class_sizes) const {
  if (static_cast<int>(class_sizes.size()) != n_)
    throw PreconditionError("blowup: need one class size per vertex");
  std::vector<int> offset(class_sizes.size() + 1, 0);
  for (std::size_t i = 0; i < class_sizes.size(); ++i) {
    if (class_sizes[i] <= 0) throw PreconditionError("blowup: class sizes must be positive");
    offset[i + 1] = offset[i] + class_sizes[i];
  }
  int n = offset.back();
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : edges())
    for (int i = 0; i < class_sizes[u]; ++i)
      for (int j = 0; j < class_sizes[v]; ++j)
        es.emplace_back(offset[u] + i, offset[v] + j);
  return Graph(n, es);
}

nlohmann::json Graph::adjacency_json() const {
  nlohmann::json adj = nlohmann::json::array();
  for (int v = 0; v < n_; ++v) adj.push_back(neighbors(v).to_vector());
  return nlohmann::json{{"n", n_}, {"adj", adj}};
}

Graph Graph::from_adjacency_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  Graph g(n);
  const auto& adj = j.at("adj");
  if (static_cast<int>(adj.size()) != n)
    throw PreconditionError("adjacency json: adj length != n");
  for (int v = 0; v < n; ++v)
    for (int u : adj[v].get<std::vector<int>>())
      if (u > v) g.add_edge_unchecked(v, u);
  // Each list must agree exactly with the symmetric closure, so a one-sided
  // edge is rejected rather than silently symmetrized.
  for (int v = 0; v < n; ++v) {
    if (g.neighbors(v) != VertexSet::of_vector(adj[v].get<std::vector<int>>()))
      throw PreconditionError("adjacency json: neighbor list of vertex " + std::to_string(v) +
                              " is not symmetric");
  }
  return g;
}

void check_subset(const Graph& g, VertexSet s, const char* what) {
  if (!s.subset_of(g.vertices()))
    throw PreconditionError(std::string(what) + ": vertex set not within graph range");
}

VertexSet common_neighborhood(const Graph& g, VertexSet a, VertexSet b) {
  check_subset(g, a, "common_neighborhood");
  check_subset(g, b, "common_neighborhood");
  if (!(a & b).empty()) throw PreconditionError("common_neighborhood: sets must be disjoint");
  std::uint64_t acc = b.bits();
  a.for_each([&](int v) { acc &= g.row_bits(v); });
  return VertexSet::from_bits(acc);
}

int min_crossing_degree(const Graph& g, std::span<const VertexSet> parts) {
  if (parts.size() < 2) throw PreconditionError("min_crossing_degree: need >= 2 parts");
  std::uint64_t seen = 0;
  for (VertexSet p : parts) {
    check_subset(g, p, "min_crossing_degree");
    if (p.empty()) throw PreconditionError("min_crossing_degree: parts must be non-empty");
    if (seen & p.bits()) throw PreconditionError("min_crossing_degree: parts must be disjoint");
    seen |= p.bits();
  }
  int best = kMaxVertices + 1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i == j) continue;
      parts[i].for_each([&](int v) {
        int d = __builtin_popcountll(g.row_bits(v) & parts[j].bits());
        if (d < best) best = d;
      });
    }
  return best;
}

PairStats pair_density(const Graph& g, VertexSet a, VertexSet b) {
  check_subset(g, a, "pair_density");
  check_subset(g, b, "pair_density");
  if (!(a & b).empty()) throw PreconditionError("pair_density: sets must be disjoint");
  if (a.empty() || b.empty()) throw PreconditionError("pair_density: sets must be non-empty");
  PairStats st;
  st.a_size = a.count();
  st.b_size = b.count();
  long long cross = 0;
  a.for_each([&](int v) { cross += __builtin_popcountll(g.row_bits(v) & b.bits()); });
  st.cross_edges = cross;
  st.density = Rational(BigInt(cross), BigInt(st.a_size * st.b_size));
  return st;
}

}  // namespace extremal
