#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fracturan/counting.hpp"
#include "fracturan/formulas.hpp"
#include "fracturan/graph.hpp"

namespace fracturan {

/// Vertex layout of K_t v (K_{2s-2t} + empty_{n+t-2s}): the dominating clique
/// first, then the middle clique, then the independent part.
struct JoinLayout {
  int dominating_first = 0;
  int middle_first = 0;
  int independent_first = 0;
  int order = 0;

  explicit JoinLayout(const ExtremalParams& p);

  int dominating_order() const { return middle_first - dominating_first; }
  int middle_order() const { return independent_first - middle_first; }
  int independent_order() const { return order - independent_first; }
};

/// K_t v (K_{2s-2t} + empty_{n+t-2s}) with the canonical labeling.
Graph build_base_join(const ExtremalParams& p);

struct ExtremalDescription {
  ExtremalParams params;
  int dominating_order = 0;
  int middle_order = 0;
  int independent_order = 0;
  int pendant_vertex = 0;  // u, the last vertex
  std::vector<Edge> deleted;

  /// {"n":..,"s2":..,"t":..,"delta":..,"parts":{...},"u":..,"deleted":[[a,b],...]}
  std::string to_json() const;
};

/// The extremal graph: the base join with the t - delta edges from u (the last
/// vertex) to the lowest-indexed dominating vertices removed. It has order n,
/// minimum degree delta and fractional matching number s2/2.
Graph build_extremal(const ExtremalParams& p);
ExtremalDescription describe_extremal(const ExtremalParams& p);

/// Families obtained from the base join by cutting a single vertex v down to
/// degree delta.
enum class Family {
  middle,      // v in the middle clique (v = first middle vertex); needs 2s - 2t >= 2
  dominating,  // v in the dominating clique (v = vertex 0)
};

std::string_view to_string(Family family);
/// Accepts "middle" / "dominating" and the short forms "F1" / "F2".
Family parse_family(std::string_view text);

/// How many neighbors v keeps in each part. Kept neighbors are always the
/// lowest-indexed ones of their part. A middle-family vertex has no
/// independent-part neighbors.
struct RetainedSplit {
  int dominating = 0;
  int middle = 0;
  int independent = 0;

  int total() const { return dominating + middle + independent; }
  friend bool operator==(const RetainedSplit&, const RetainedSplit&) = default;
};

struct FamilySpec {
  Family family = Family::middle;
  ExtremalParams params;
  RetainedSplit split;

  void validate() const;
};

int family_vertex(Family family, const ExtremalParams& p);

Graph build_family_member(const FamilySpec& spec);

/// Every retained split summing to delta within the part capacities.
std::vector<RetainedSplit> family_splits(Family family, const ExtremalParams& p);

/// Maximum motif count over the family, one member per retained split (the
/// count depends only on the split because vertices inside a part are
/// interchangeable).
Count family_max_count(Family family, const ExtremalParams& p, const Motif& motif);

/// Same maximum, enumerating every literal set of kept neighbors of v
/// (2^deg(v) subsets at most). Cross-check for family_max_count.
Count family_max_count_literal(Family family, const ExtremalParams& p, const Motif& motif);

inline constexpr int kMaxLiteralDegree = 16;

}  // namespace fracturan
