#include "fracturan/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fracturan/error.hpp"

namespace fracturan {

namespace {

constexpr int kGraph6Bias = 63;
constexpr std::string_view kGraph6Marker = ">>graph6<<";

void check_combined_order(int a, int b) {
  if (a + b > kMaxVertices) {
    fail(ErrorCode::out_of_range, "combined order " + std::to_string(a + b) + " exceeds " +
                                      std::to_string(kMaxVertices) + " vertices");
  }
}

}  // namespace

Edge Edge::make(int a, int b) {
  require(a != b, "an edge needs two distinct endpoints (got loop at " + std::to_string(a) + ")");
  require(a >= 0 && b >= 0, "negative vertex index");
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxVertices) {
    fail(ErrorCode::out_of_range, "graph order must lie in 0.." + std::to_string(kMaxVertices) +
                                      " (got " + std::to_string(order) + ")");
  }
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::complete(int order) { return complement(Graph(order)); }

Graph Graph::cycle(int order) {
  require(order >= 3, "a cycle needs at least 3 vertices");
  Graph g(order);
  for (int v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
  return g;
}

Graph Graph::path(int order) {
  Graph g(order);
  for (int v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::complete_bipartite(int left, int right) { return join(Graph(left), Graph(right)); }

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int v = 1; v < order_; ++v) {
    for (int u = 0; u < v; ++u) {
      if (has_edge(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) {
    fail(ErrorCode::invalid_argument,
         "vertex " + std::to_string(v) + " outside 0.." + std::to_string(order_ - 1));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  require(u != v, "self-loops are not allowed");
  adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
  adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~vertex_bit(v);
  adj_[static_cast<std::size_t>(v)] &= ~vertex_bit(u);
}

Graph Graph::relabeled(std::span<const int> perm) const {
  require(static_cast<int>(perm.size()) == order_, "permutation size must equal the graph order");
  std::vector<int> inverse(perm.size(), -1);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    int old = perm[k];
    check_vertex(old);
    require(inverse[static_cast<std::size_t>(old)] < 0, "not a permutation");
    inverse[static_cast<std::size_t>(old)] = static_cast<int>(k);
  }
  Graph out(order_);
  for (const Edge& e : edges()) {
    out.add_edge(inverse[static_cast<std::size_t>(e.u)], inverse[static_cast<std::size_t>(e.v)]);
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.order_ == b.order_ && a.adj_ == b.adj_;
}

// ---------------------------------------------------------------------------
// graph6

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Marker)) text.remove_prefix(kGraph6Marker.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
                           text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) fail(ErrorCode::graph6_header, "empty graph6 line");

  auto value = [](char c) { return static_cast<int>(static_cast<unsigned char>(c)) - kGraph6Bias; };
  auto in_range = [&](char c) { return value(c) >= 0 && value(c) <= 63; };

  std::size_t pos = 0;
  long order = 0;
  if (!in_range(text[0])) {
    fail(ErrorCode::graph6_header,
         "first character '" + std::string(1, text[0]) + "' is not a graph6 size byte");
  }
  if (value(text[0]) < 63) {
    order = value(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && value(text[1]) == 63) {
      fail(ErrorCode::graph6_order, "8-byte graph6 size prefix (order >= 258048) is not supported");
    }
    if (text.size() < 4) fail(ErrorCode::graph6_header, "truncated 4-byte graph6 size prefix");
    for (std::size_t i = 1; i <= 3; ++i) {
      if (!in_range(text[i])) fail(ErrorCode::graph6_header, "invalid character in size prefix");
      order = (order << 6) | value(text[i]);
    }
    if (order < 63) {
      fail(ErrorCode::graph6_header,
           "order " + std::to_string(order) + " must use the 1-byte size prefix");
    }
    pos = 4;
  }
  if (order > kMaxVertices) {
    fail(ErrorCode::graph6_order, "graph6 order " + std::to_string(order) + " exceeds the " +
                                      std::to_string(kMaxVertices) + "-vertex cap");
  }

  const int n = static_cast<int>(order);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
  const std::size_t groups = (bits + 5) / 6;
  std::string_view payload = text.substr(pos);
  if (payload.size() != groups) {
    fail(ErrorCode::graph6_payload, "expected " + std::to_string(groups) +
                                        " payload characters for order " + std::to_string(n) +
                                        ", found " + std::to_string(payload.size()));
  }
  for (char c : payload) {
    if (!in_range(c)) {
      fail(ErrorCode::graph6_payload, "payload character '" + std::string(1, c) +
                                          "' outside the graph6 alphabet");
    }
  }

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int group = value(payload[k / 6]);
      if ((group >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(u, v);
    }
  }
  if (groups > 0) {
    const int spare = static_cast<int>(groups * 6 - bits);
    if ((value(payload.back()) & ((1 << spare) - 1)) != 0) {
      fail(ErrorCode::graph6_padding, "trailing padding bits of the last graph6 group are nonzero");
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Bias));
    out.push_back(static_cast<char>((n & 63) + kGraph6Bias));
  }
  int group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kGraph6Bias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kGraph6Bias));
  return out;
}

// ---------------------------------------------------------------------------
// structural constructors

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int v = 1; v < g.order(); ++v) {
    for (int u = 0; u < v; ++u) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  check_combined_order(g.order(), h.order());
  Graph out(g.order() + h.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(e.u + g.order(), e.v + g.order());
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

Graph delete_edges(const Graph& g, std::span<const Edge> edges) {
  Graph out = g;
  for (const Edge& raw : edges) {
    const Edge e = Edge::make(raw.u, raw.v);
    if (e.v >= g.order() || !g.has_edge(e.u, e.v)) {
      fail(ErrorCode::invalid_argument,
           "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
    }
    if (!out.has_edge(e.u, e.v)) {
      fail(ErrorCode::invalid_argument,
           "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") listed twice");
    }
    out.remove_edge(e.u, e.v);
  }
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  require(g.order() >= 1, "degree statistics need at least one vertex");
  DegreeStats stats;
  stats.sorted_degrees.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) stats.sorted_degrees.push_back(g.degree(v));
  std::sort(stats.sorted_degrees.begin(), stats.sorted_degrees.end());
  stats.min_degree = stats.sorted_degrees.front();
  stats.max_degree = stats.sorted_degrees.back();
  return stats;
}

int min_degree(const Graph& g) {
  int best = kMaxVertices;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return g.order() == 0 ? 0 : best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

// ---------------------------------------------------------------------------
// isomorphism

namespace {

// Stable colors computed jointly for both graphs so that equal colors mean
// equal refinement histories.
void refine_colors(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch) {
  const int n = g.order();
  cg.assign(static_cast<std::size_t>(n), 0);
  ch.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    cg[static_cast<std::size_t>(v)] = g.degree(v);
    ch[static_cast<std::size_t>(v)] = h.degree(v);
  }
  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<int, std::vector<int>>;
    auto signature = [](const Graph& graph, const std::vector<int>& colors, int v) {
      std::vector<int> around;
      VertexSet rest = graph.neighbors(v);
      while (rest != 0) {
        around.push_back(colors[static_cast<std::size_t>(std::countr_zero(rest))]);
        rest &= rest - 1;
      }
      std::sort(around.begin(), around.end());
      return Signature{colors[static_cast<std::size_t>(v)], std::move(around)};
    };
    std::map<Signature, int> palette;
    std::vector<Signature> sg, sh;
    for (int v = 0; v < n; ++v) {
      sg.push_back(signature(g, cg, v));
      sh.push_back(signature(h, ch, v));
    }
    for (const auto& s : sg) palette.emplace(s, 0);
    for (const auto& s : sh) palette.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : palette) id = next++;
    for (int v = 0; v < n; ++v) {
      cg[static_cast<std::size_t>(v)] = palette[sg[static_cast<std::size_t>(v)]];
      ch[static_cast<std::size_t>(v)] = palette[sh[static_cast<std::size_t>(v)]];
    }
    if (palette.size() == classes) break;
    classes = palette.size();
  }
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& cg;
  const std::vector<int>& ch;
  std::vector<int> order;  // g-vertices in assignment order
  std::vector<int> image;  // g-vertex -> h-vertex
  VertexSet used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < h.order(); ++w) {
      if ((used >> w) & 1U) continue;
      if (cg[static_cast<std::size_t>(v)] != ch[static_cast<std::size_t>(w)]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const int u = order[i];
        consistent = g.has_edge(u, v) == h.has_edge(image[static_cast<std::size_t>(u)], w);
      }
      if (!consistent) continue;
      image[static_cast<std::size_t>(v)] = w;
      used |= vertex_bit(w);
      if (extend(depth + 1)) return true;
      used &= ~vertex_bit(w);
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.order() == 0) return true;

  std::vector<int> cg, ch;
  refine_colors(g, h, cg, ch);
  std::vector<int> hist_g = cg, hist_h = ch;
  std::sort(hist_g.begin(), hist_g.end());
  std::sort(hist_h.begin(), hist_h.end());
  if (hist_g != hist_h) return false;

  // Assign vertices of rare colors first, then grow along edges.
  std::map<int, int> class_size;
  for (int c : cg) ++class_size[c];
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return class_size[cg[static_cast<std::size_t>(a)]] < class_size[cg[static_cast<std::size_t>(b)]];
  });

  IsoSearch search{g, h, cg, ch, std::move(order),
                   std::vector<int>(static_cast<std::size_t>(g.order()), -1)};
  return search.extend(0);
}

}  // namespace fracturan
