#include "fracturan/counting.hpp"

#include <array>
#include <charconv>

#include "fracturan/error.hpp"

namespace fracturan {

namespace {

using BinomTable = std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1>;

const BinomTable& small_binomials() {
  static const BinomTable table = [] {
    BinomTable t{};
    for (std::size_t a = 0; a <= kMaxVertices; ++a) {
      t[a][0] = 1;
      for (std::size_t b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + (b < a ? t[a - 1][b] : 0);
    }
    return t;
  }();
  return table;
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorCode::invalid_argument, "bad motif '" + std::string(whole) +
                                          "' (expected clique:<l> or biclique:<r1>,<r2>)");
  }
  return value;
}

bool is_clique(const Graph& g, VertexSet set) {
  for (VertexSet rest = set; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((g.neighbors(v) | (VertexSet{1} << v)) != (g.neighbors(v) | set)) return false;
  }
  return true;
}

std::uint64_t cliques_within(const Graph& g, VertexSet candidates, int remaining) {
  if (remaining == 1) return static_cast<std::uint64_t>(set_size(candidates));
  // Dense candidate sets close out in one step.
  if (remaining >= 3 && is_clique(g, candidates)) {
    return small_binomials()[static_cast<std::size_t>(set_size(candidates))]
                            [static_cast<std::size_t>(remaining)];
  }
  std::uint64_t total = 0;
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    const VertexSet next = candidates & g.neighbors(v);
    if (set_size(next) >= remaining - 1) total += cliques_within(g, next, remaining - 1);
  }
  return total;
}

struct BicliqueCounter {
  const Graph& g;
  int r2;
  u128 total = 0;

  // Chooses the r1-side in increasing vertex order; `common` is the common
  // neighborhood of the chosen vertices, which never contains them.
  void choose(VertexSet allowed, VertexSet common, int remaining) {
    if (remaining == 0) {
      const u128 add = small_binomials()[static_cast<std::size_t>(set_size(common))]
                                        [static_cast<std::size_t>(r2)];
      if (__builtin_add_overflow(total, add, &total)) {
        fail(ErrorCode::overflow, "biclique count exceeds 128 bits");
      }
      return;
    }
    while (allowed != 0) {
      const int v = std::countr_zero(allowed);
      allowed &= allowed - 1;
      const VertexSet next = common & g.neighbors(v);
      if (set_size(next) >= r2) choose(allowed, next, remaining - 1);
    }
  }
};

bool all_adjacent(const Graph& g, VertexSet from, VertexSet to) {
  for (int u = 0; u < g.order(); ++u) {
    if (((from >> u) & 1U) == 0) continue;
    for (int v = 0; v < g.order(); ++v) {
      if (((to >> v) & 1U) != 0 && !g.has_edge(u, v)) return false;
    }
  }
  return true;
}

}  // namespace

Motif Motif::clique(int order) {
  require(order >= 2, "clique motif needs l >= 2 (got " + std::to_string(order) + ")");
  return Motif(Kind::clique, order, 0);
}

Motif Motif::biclique(int r1, int r2) {
  require(r1 >= 1 && r2 >= 1, "biclique motif needs r1, r2 >= 1");
  return r1 <= r2 ? Motif(Kind::biclique, r1, r2) : Motif(Kind::biclique, r2, r1);
}

Motif Motif::parse(std::string_view text) {
  constexpr std::string_view kClique = "clique:";
  constexpr std::string_view kBiclique = "biclique:";
  if (text.starts_with(kClique)) return clique(parse_int(text.substr(kClique.size()), text));
  if (text.starts_with(kBiclique)) {
    const std::string_view rest = text.substr(kBiclique.size());
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      fail(ErrorCode::invalid_argument, "bad motif '" + std::string(text) + "' (missing ',')");
    }
    return biclique(parse_int(rest.substr(0, comma), text), parse_int(rest.substr(comma + 1), text));
  }
  fail(ErrorCode::invalid_argument,
       "bad motif '" + std::string(text) + "' (expected clique:<l> or biclique:<r1>,<r2>)");
}

std::string Motif::to_string() const {
  if (is_clique()) return "clique:" + std::to_string(a_);
  return "biclique:" + std::to_string(a_) + "," + std::to_string(b_);
}

namespace detail {

std::uint64_t clique_count_native(const Graph& g, int order) {
  require(order >= 1, "clique order must be at least 1");
  if (order > g.order()) return 0;
  return cliques_within(g, g.vertices(), order);
}

u128 biclique_count_native(const Graph& g, int r1, int r2) {
  require(r1 >= 1 && r2 >= 1, "biclique sides must be at least 1");
  if (r1 > r2) std::swap(r1, r2);
  if (r1 + r2 > g.order()) return 0;
  BicliqueCounter counter{g, r2};
  counter.choose(g.vertices(), g.vertices(), r1);
  if (r1 == r2) {
    // Each unordered pair {A, B} was seen once with A chosen and once with B.
    if (counter.total % 2 != 0) fail(ErrorCode::internal, "balanced biclique total is odd");
    return counter.total / 2;
  }
  return counter.total;
}

u128 motif_count_native(const Graph& g, const Motif& motif) {
  return motif.is_clique() ? clique_count_native(g, motif.clique_order())
                           : biclique_count_native(g, motif.r1(), motif.r2());
}

}  // namespace detail

Count count_cliques(const Graph& g, int order) { return Count(detail::clique_count_native(g, order)); }

Count count_bicliques(const Graph& g, int r1, int r2) {
  return to_count(detail::biclique_count_native(g, r1, r2));
}

Count count_motif(const Graph& g, const Motif& motif) {
  return motif.is_clique() ? count_cliques(g, motif.clique_order())
                           : count_bicliques(g, motif.r1(), motif.r2());
}

Count count_oracle(const Graph& g, const Motif& motif) {
  const int n = g.order();
  if (n > kMaxOracleOrder) {
    fail(ErrorCode::out_of_range, "oracle enumeration limited to " +
                                      std::to_string(kMaxOracleOrder) + " vertices");
  }
  const VertexSet universe = first_vertices(n);
  std::uint64_t total = 0;

  if (motif.is_clique()) {
    for (VertexSet s = 0; s <= universe; ++s) {
      if (set_size(s) != motif.clique_order()) continue;
      bool complete = true;
      for (int u = 0; u < n && complete; ++u) {
        for (int v = u + 1; v < n && complete; ++v) {
          if (((s >> u) & 1U) && ((s >> v) & 1U)) complete = g.has_edge(u, v);
        }
      }
      if (complete) ++total;
    }
    return Count(total);
  }

  const bool balanced = motif.r1() == motif.r2();
  for (VertexSet a = 0; a <= universe; ++a) {
    if (set_size(a) != motif.r1()) continue;
    const VertexSet rest = universe & ~a;
    // Every submask of the complement, including the empty one.
    for (VertexSet b = rest;; b = (b - 1) & rest) {
      if (set_size(b) == motif.r2() && (!balanced || std::countr_zero(a) < std::countr_zero(b)) &&
          all_adjacent(g, a, b)) {
        ++total;
      }
      if (b == 0) break;
    }
  }
  return Count(total);
}

}  // namespace fracturan
