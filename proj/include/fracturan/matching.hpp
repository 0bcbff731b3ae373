#pragma once

#include <string>
#include <vector>

#include "fracturan/graph.hpp"
#include "fracturan/numeric.hpp"

namespace fracturan {

/// A vertex subset T together with the number of isolated vertices of G - T.
struct DeficiencyWitness {
  VertexSet removed = 0;
  int isolated = 0;

  int deficiency() const { return isolated - set_size(removed); }
};

struct DeficiencyResult {
  HalfInt nu_star;
  DeficiencyWitness witness;
};

/// Largest subset order accepted by nu_star_deficiency (2^n subsets).
inline constexpr int kMaxDeficiencyOrder = 24;
/// Largest order accepted by matching_number's branching search.
inline constexpr int kMaxBranchingOrder = 16;

/// Fractional matching number from the fractional Tutte-Berge formula:
/// nu* = (n - max_T (i(G - T) - |T|)) / 2, maximized over every subset T.
///
/// Subsets are visited in Gray-code order and the isolated count is updated
/// incrementally. Among maximizers the witness is the lexicographically
/// smallest subset (compared as ascending vertex lists, the empty set first).
DeficiencyResult nu_star_deficiency(const Graph& g);

/// Fractional matching number as half the maximum matching of the bipartite
/// double cover (vertex v on the left, v' on the right, uv' and vu' per edge).
HalfInt nu_star_fast(const Graph& g);

/// Optimal half-integral fractional matching. Weights are stored doubled
/// (0, 1 or 2), one entry per edge of the graph in graph6 order.
struct FractionalCertificate {
  struct Entry {
    Edge edge;
    int doubled_weight = 0;
  };
  std::vector<Entry> entries;
  int total_doubled = 0;

  /// Every vertex load is at most 1 and the stored total equals the sum.
  bool feasible_for(const Graph& g) const;
  /// {"edges": [[u,v,doubled_weight],...], "total_doubled": k}
  std::string to_json() const;
};

FractionalCertificate fractional_certificate(const Graph& g);

/// Size of a maximum matching by exhaustive branching (n <= 16).
int matching_number(const Graph& g);

/// Lexicographic comparison of vertex subsets as ascending vertex lists.
bool subset_lex_less(VertexSet a, VertexSet b);

}  // namespace fracturan
