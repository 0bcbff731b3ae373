#pragma once

#include <string>
#include <string_view>

#include "fracturan/graph.hpp"
#include "fracturan/numeric.hpp"

namespace fracturan {

/// K_l or K_{r1,r2}. Bicliques are normalized so that r1 <= r2.
class Motif {
 public:
  enum class Kind { clique, biclique };

  static Motif clique(int order);
  static Motif biclique(int r1, int r2);
  /// "clique:<l>" or "biclique:<r1>,<r2>".
  static Motif parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_clique() const { return kind_ == Kind::clique; }
  /// Clique order, or r1 + r2 for a biclique.
  int vertices() const { return is_clique() ? a_ : a_ + b_; }
  int clique_order() const { return a_; }
  int r1() const { return a_; }
  int r2() const { return b_; }
  /// 2 for balanced bicliques (both sides interchangeable), 1 otherwise.
  int symmetry() const { return !is_clique() && a_ == b_ ? 2 : 1; }

  std::string to_string() const;

  friend bool operator==(const Motif&, const Motif&) = default;

 private:
  Motif(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

  Kind kind_;
  int a_;
  int b_;
};

/// Number of l-subsets that induce a complete graph (l = 1 gives n, l = 2 gives e).
Count count_cliques(const Graph& g, int order);

/// Number of K_{r1,r2} subgraph copies: unordered pairs {A, B} of disjoint
/// sets with |A| = r1, |B| = r2 and every A-B edge present. Edges inside A or
/// B are irrelevant.
Count count_bicliques(const Graph& g, int r1, int r2);

Count count_motif(const Graph& g, const Motif& motif);

/// Naive enumeration of vertex subsets / subset pairs, no pruning (n <= 12).
/// Independent of the optimized counters; used to cross-check them.
Count count_oracle(const Graph& g, const Motif& motif);

inline constexpr int kMaxOracleOrder = 12;

namespace detail {
// Native-width kernels behind the Count-returning counters. Results for
// n <= 64 always fit: cliques in 64 bits, bicliques in 128 bits.
std::uint64_t clique_count_native(const Graph& g, int order);
u128 biclique_count_native(const Graph& g, int r1, int r2);
u128 motif_count_native(const Graph& g, const Motif& motif);
}  // namespace detail

}  // namespace fracturan
