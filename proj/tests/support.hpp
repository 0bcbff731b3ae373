#pragma once

// Helpers and independent oracles shared by the unit tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fracturan/graph.hpp"

namespace testing {

using fracturan::Edge;
using fracturan::Graph;

inline Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph star(int leaves) { return fracturan::join(Graph::complete(1), Graph(leaves)); }

/// The labeled graph on n vertices whose edge i (graph6 column order) is bit i of mask.
inline Graph labeled(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

inline void for_each_labeled(int n, const std::function<void(const Graph&)>& body) {
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) body(labeled(n, mask));
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph random_graph(std::mt19937_64& rng, int min_n, int max_n) {
  std::uniform_int_distribution<int> order(min_n, max_n);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  const int n = order(rng);
  return random_graph(rng, n, density(rng));
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Brute-force isomorphism over all n! bijections (n <= 8).
inline bool isomorphic_by_permutation(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (!h.has_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Twice the fractional matching number by exhaustive search over doubled
/// edge weights in {0, 1, 2} with every vertex load at most 2. Optimal
/// fractional matchings can be taken half-integral, so this is exact.
inline int doubled_nu_star_by_weights(const Graph& g) {
  const auto edges = g.edges();
  std::vector<int> load(static_cast<std::size_t>(g.order()), 0);
  int best = 0;
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int total) {
    if (i == edges.size()) {
      best = std::max(best, total);
      return;
    }
    auto& a = load[static_cast<std::size_t>(edges[i].u)];
    auto& b = load[static_cast<std::size_t>(edges[i].v)];
    for (int w = 0; w <= 2; ++w) {
      if (a + w > 2 || b + w > 2) break;
      a += w;
      b += w;
      go(i + 1, total + w);
      a -= w;
      b -= w;
    }
  };
  go(0, 0);
  return best;
}

/// Number of K_l copies by checking every l-subset edge by edge.
inline std::uint64_t cliques_by_subsets(const Graph& g, int l) {
  std::uint64_t count = 0;
  const int n = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) != l) continue;
    bool complete = true;
    for (int u = 0; u < n && complete; ++u) {
      for (int v = u + 1; v < n && complete; ++v) {
        if (((s >> u) & 1U) && ((s >> v) & 1U) && !g.has_edge(u, v)) complete = false;
      }
    }
    if (complete) ++count;
  }
  return count;
}

/// Number of K_{r1,r2} copies via ordered side pairs (A, B), divided by 2
/// when the sides are interchangeable.
inline std::uint64_t bicliques_by_ordered_pairs(const Graph& g, int r1, int r2) {
  const int n = g.order();
  std::uint64_t ordered = 0;
  const std::uint64_t all = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < all; ++a) {
    if (std::popcount(a) != r1) continue;
    for (std::uint64_t b = 0; b < all; ++b) {
      if ((a & b) != 0 || std::popcount(b) != r2) continue;
      bool full = true;
      for (int u = 0; u < n && full; ++u) {
        for (int v = 0; v < n && full; ++v) {
          if (((a >> u) & 1U) && ((b >> v) & 1U) && !g.has_edge(u, v)) full = false;
        }
      }
      if (full) ++ordered;
    }
  }
  return r1 == r2 ? ordered / 2 : ordered;
}

inline std::string data_path(const std::string& name) {
  return std::string(FRACTURAN_SOURCE_DIR) + "/" + name;
}

}  // namespace testing
