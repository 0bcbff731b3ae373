#include "fracturan/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "fracturan/error.hpp"

namespace fracturan {

namespace {

VertexSet range_set(int first, int count) {
  return count <= 0 ? 0 : first_vertices(first + count) & ~first_vertices(first);
}

// Lowest `count` members of `s`.
VertexSet lowest(VertexSet s, int count) {
  VertexSet out = 0;
  for (int i = 0; i < count && s != 0; ++i) {
    out |= s & (~s + 1);
    s &= s - 1;
  }
  return out;
}

Graph cut_vertex(Graph g, int v, VertexSet keep) {
  for (VertexSet drop = g.neighbors(v) & ~keep; drop != 0; drop &= drop - 1) {
    g.remove_edge(v, std::countr_zero(drop));
  }
  return g;
}

void check_buildable(const ExtremalParams& p) {
  p.validate();
  if (p.n > kMaxVertices) {
    fail(ErrorCode::out_of_range, "cannot build a graph on " + std::to_string(p.n) +
                                      " vertices (cap " + std::to_string(kMaxVertices) + ")");
  }
}

}  // namespace

JoinLayout::JoinLayout(const ExtremalParams& p)
    : dominating_first(0),
      middle_first(p.t),
      independent_first(p.t + p.middle_order()),
      order(p.n) {}

Graph build_base_join(const ExtremalParams& p) {
  check_buildable(p);
  const Graph cliques =
      disjoint_union(Graph::complete(p.middle_order()), Graph(p.independent_order()));
  return join(Graph::complete(p.t), cliques);
}

ExtremalDescription describe_extremal(const ExtremalParams& p) {
  check_buildable(p);
  const JoinLayout layout(p);
  ExtremalDescription d;
  d.params = p;
  d.dominating_order = layout.dominating_order();
  d.middle_order = layout.middle_order();
  d.independent_order = layout.independent_order();
  d.pendant_vertex = p.n - 1;
  for (int k = 0; k < p.t - p.delta; ++k) d.deleted.push_back({k, d.pendant_vertex});
  return d;
}

Graph build_extremal(const ExtremalParams& p) {
  const ExtremalDescription d = describe_extremal(p);
  return delete_edges(build_base_join(p), d.deleted);
}

std::string ExtremalDescription::to_json() const {
  std::ostringstream out;
  out << "{\"n\":" << params.n << ",\"s2\":" << params.s2 << ",\"t\":" << params.t
      << ",\"delta\":" << params.delta << ",\"parts\":{\"dominating\":" << dominating_order
      << ",\"middle\":" << middle_order << ",\"independent\":" << independent_order
      << "},\"u\":" << pendant_vertex << ",\"deleted\":[";
  for (std::size_t i = 0; i < deleted.size(); ++i) {
    if (i > 0) out << ',';
    out << '[' << deleted[i].u << ',' << deleted[i].v << ']';
  }
  out << "]}";
  return out.str();
}

std::string_view to_string(Family family) {
  return family == Family::middle ? "middle" : "dominating";
}

Family parse_family(std::string_view text) {
  if (text == "middle" || text == "F1") return Family::middle;
  if (text == "dominating" || text == "F2") return Family::dominating;
  fail(ErrorCode::invalid_argument,
       "family must be middle (F1) or dominating (F2), got '" + std::string(text) + "'");
}

int family_vertex(Family family, const ExtremalParams& p) {
  return family == Family::middle ? JoinLayout(p).middle_first : 0;
}

void FamilySpec::validate() const {
  params.validate();
  const auto& s = split;
  require(s.dominating >= 0 && s.middle >= 0 && s.independent >= 0,
          "retained split entries must be nonnegative");
  require(s.total() == params.delta, "retained split must sum to delta = " +
                                         std::to_string(params.delta));
  if (family == Family::middle) {
    require(params.middle_order() >= 2,
            "middle family needs a middle clique of order >= 2, i.e. t <= s - 1 (" +
                params.to_string() + ")");
    require(s.dominating <= params.t, "split keeps more dominating neighbors than exist");
    require(s.middle <= params.middle_order() - 1, "split keeps more middle neighbors than exist");
    require(s.independent == 0, "a middle-clique vertex has no independent-part neighbors");
  } else {
    require(s.dominating <= params.t - 1, "split keeps more dominating neighbors than exist");
    require(s.middle <= params.middle_order(), "split keeps more middle neighbors than exist");
    require(s.independent <= params.independent_order(),
            "split keeps more independent neighbors than exist");
  }
}

Graph build_family_member(const FamilySpec& spec) {
  spec.validate();
  check_buildable(spec.params);
  const ExtremalParams& p = spec.params;
  const JoinLayout layout(p);
  const int v = family_vertex(spec.family, p);
  const VertexSet others = ~vertex_bit(v);
  const VertexSet keep =
      lowest(range_set(layout.dominating_first, layout.dominating_order()) & others,
             spec.split.dominating) |
      lowest(range_set(layout.middle_first, layout.middle_order()) & others, spec.split.middle) |
      lowest(range_set(layout.independent_first, layout.independent_order()),
             spec.split.independent);
  return cut_vertex(build_base_join(p), v, keep);
}

std::vector<RetainedSplit> family_splits(Family family, const ExtremalParams& p) {
  std::vector<RetainedSplit> out;
  for (int a = 0; a <= p.delta; ++a) {
    for (int b = 0; a + b <= p.delta; ++b) {
      const FamilySpec spec{family, p, {a, b, p.delta - a - b}};
      try {
        spec.validate();
      } catch (const Error&) {
        continue;
      }
      out.push_back(spec.split);
    }
  }
  return out;
}

Count family_max_count(Family family, const ExtremalParams& p, const Motif& motif) {
  const auto splits = family_splits(family, p);
  if (splits.empty()) {
    // Surface the reason (validation of a representative split).
    FamilySpec{family, p, {p.delta, 0, 0}}.validate();
    fail(ErrorCode::invalid_argument, "family has no members for " + p.to_string());
  }
  u128 best = 0;
  for (const auto& split : splits) {
    best = std::max(best, detail::motif_count_native(build_family_member({family, p, split}), motif));
  }
  return to_count(best);
}

Count family_max_count_literal(Family family, const ExtremalParams& p, const Motif& motif) {
  check_buildable(p);
  if (family == Family::middle) {
    require(p.middle_order() >= 2, "middle family needs t <= s - 1 (" + p.to_string() + ")");
  }
  const Graph base = build_base_join(p);
  const int v = family_vertex(family, p);
  const VertexSet around = base.neighbors(v);
  const int degree = set_size(around);
  if (degree > kMaxLiteralDegree) {
    fail(ErrorCode::out_of_range, "literal enumeration needs deg(v) <= " +
                                      std::to_string(kMaxLiteralDegree));
  }
  require(p.delta <= degree, "delta exceeds the degree of the cut vertex");

  std::vector<int> slots;
  for (VertexSet s = around; s != 0; s &= s - 1) slots.push_back(std::countr_zero(s));

  u128 best = 0;
  const std::uint32_t limit = std::uint32_t{1} << degree;
  for (std::uint32_t pick = 0; pick < limit; ++pick) {
    if (std::popcount(pick) != p.delta) continue;
    VertexSet keep = 0;
    for (int i = 0; i < degree; ++i) {
      if ((pick >> i) & 1U) keep |= vertex_bit(slots[static_cast<std::size_t>(i)]);
    }
    best = std::max(best, detail::motif_count_native(cut_vertex(base, v, keep), motif));
  }
  return to_count(best);
}

}  // namespace fracturan
