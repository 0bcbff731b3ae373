#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fracturan {

/// Bit v set <=> vertex v belongs to the set.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
constexpr VertexSet first_vertices(int n) { return n >= 64 ? ~VertexSet{0} : vertex_bit(n) - 1; }
inline int set_size(VertexSet s) { return std::popcount(s); }

struct Edge {
  int u = 0;
  int v = 0;

  /// Orders the endpoints so that u < v; rejects loops.
  static Edge make(int a, int b);

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, n <= 64, one neighbor word per
/// vertex. Always symmetric and loop-free.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph complete(int order);
  static Graph cycle(int order);
  static Graph path(int order);
  static Graph complete_bipartite(int left, int right);

  int order() const { return order_; }
  int size() const;
  VertexSet vertices() const { return first_vertices(order_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return set_size(neighbors(v)); }
  bool has_edge(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Vertex k of the result is vertex perm[k] of this graph.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> sorted_degrees;  // ascending
};

// graph6 interchange (no relabeling; upper triangle in column order).
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

Graph complement(const Graph& g);
/// g on 0..n(g)-1, h shifted after it, plus every cross edge.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Removes exactly the listed edges; each must be present and listed once.
Graph delete_edges(const Graph& g, std::span<const Edge> edges);

DegreeStats degree_stats(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);

/// Exact isomorphism test by color refinement followed by backtracking.
/// Intended for small graphs (n <= 10), correct for any n.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace fracturan
