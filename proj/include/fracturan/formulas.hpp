#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fracturan/counting.hpp"
#include "fracturan/numeric.hpp"

namespace fracturan {

/// Parameters of the extremal graph
///   K_t v (K_{2s-2t} + empty_{n+t-2s})  minus t - delta edges at one
///   independent vertex u.
/// Half-integral s is carried as s2 = 2s, so every formula stays integral.
struct ExtremalParams {
  int n = 0;
  int s2 = 0;
  int t = 0;
  int delta = 0;

  /// Largest admissible t: s for even 2s, s - 3/2 for odd 2s (a middle
  /// clique of order 1 would be isolated, so 2s - 2t = 1 is excluded).
  static int max_t(int s2) { return s2 % 2 == 0 ? s2 / 2 : (s2 - 3) / 2; }

  int middle_order() const { return s2 - 2 * t; }
  int independent_order() const { return n + t - s2; }

  bool valid() const noexcept;
  /// Throws ErrorCode::invalid_argument naming the violated rule.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const ExtremalParams&, const ExtremalParams&) = default;
};

/// Number of K_l copies in the extremal graph:
///   C(2s-t, l) + C(t, l-1)(n+t-2s-1) + C(delta, l-1).
Count clique_formula(const ExtremalParams& p, int order);

/// Number of K_{r1,r2} copies in the extremal graph, r = r1 + r2, c = 2 when
/// r1 = r2 and 1 otherwise:
///   (1/c) sum_j C(t, r_j) [C(n-r_j-1, r-r_j) - C(2s-t-r_j, r-r_j)]
/// + (1/c) sum_j C(delta, r_j) C(n-r_j-1, r-r_j-1)
/// + (1/c) C(2s-t, r) C(r, r1).
Count biclique_formula(const ExtremalParams& p, int r1, int r2);

Count motif_formula(const ExtremalParams& p, const Motif& motif);

enum class DeltaMode {
  exact,     // minimum degree equal to delta
  at_least,  // minimum degree at least delta
};

std::string_view to_string(DeltaMode mode);
DeltaMode parse_delta_mode(std::string_view text);

/// Maximum number of motif copies over n-vertex graphs with fractional
/// matching number s2/2 and minimum degree delta: the larger of the formula
/// at t = delta and at t = max_t(s2). In at_least mode, the maximum of that
/// value over every feasible minimum degree >= delta.
///
/// Requires n >= s2 + 1, s2 >= 4 and 1 <= delta <= max_t(s2); a larger delta
/// admits no graph at all and is rejected.
Count motif_bound(int n, int s2, int delta, const Motif& motif, DeltaMode mode = DeltaMode::exact);
Count clique_bound(int n, int s2, int delta, int order, DeltaMode mode = DeltaMode::exact);
Count biclique_bound(int n, int s2, int delta, int r1, int r2, DeltaMode mode = DeltaMode::exact);

/// Extremal parameter tuples whose formula value equals motif_bound; these
/// are the graphs that attain the bound.
std::vector<ExtremalParams> bound_attaining_params(int n, int s2, int delta, const Motif& motif,
                                                   DeltaMode mode = DeltaMode::exact);

/// Maximum of the motif formula over every admissible t in [delta, max_t].
Count formula_scan_max(int n, int s2, int delta, const Motif& motif);

/// Edges of an n-vertex graph with fractional matching number s2/2 and
/// minimum degree at least one.
Count edge_bound_min_degree_one(int n, int s2);

/// Erdos-Gallai bound: edges of an n-vertex graph with matching number k, n >= 2k+1.
Count edge_bound_matching_number(int n, int k);

/// Edges of an n-vertex graph with fractional matching number s2/2 and
/// maximum degree at most d, n > s2. Where two branches of the case split
/// apply (their boundaries overlap) both are evaluated and must agree.
Count edge_bound_max_degree(int n, int s2, int d);

// ---------------------------------------------------------------------------
// Discrete convexity of the formula terms in t.

enum class ConvexFamily {
  core,      // C(2s - t, l)
  pendant,   // C(t, l-1) (n + t - 2s - 1)
  biclique,  // C(2s-t, r) C(r, r1) + sum_j C(t, r_j)[C(n-r_j-1, r-r_j) - C(2s-t-r_j, r-r_j)]
};

std::string_view to_string(ConvexFamily family);
ConvexFamily parse_convex_family(std::string_view text);

/// Parameters of one term; fields a family does not use are ignored.
struct ConvexityPoint {
  int n = 0;
  int s2 = 0;
  int order = 0;  // l, for core and pendant
  int r1 = 0;
  int r2 = 0;
  int t = 0;
};

SignedCount convex_term(ConvexFamily family, const ConvexityPoint& p);

/// Admissible t for second differences: t - 1 >= 1, and t + 1 <= 2s for the
/// core and pendant terms, t + 1 <= floor(s) for the biclique term. The
/// pendant and biclique terms also need n >= 2s + 1.
bool in_convexity_domain(ConvexFamily family, const ConvexityPoint& p);

/// F(t + 1) + F(t - 1) - 2 F(t), exact.
SignedCount second_difference(ConvexFamily family, const ConvexityPoint& p);

}  // namespace fracturan
