#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fracturan/constructions.hpp"
#include "fracturan/error.hpp"
#include "fracturan/matching.hpp"
#include "support.hpp"

using namespace fracturan;

namespace {

std::vector<ExtremalParams> all_params(int max_n, int max_s2) {
  std::vector<ExtremalParams> out;
  for (int s2 = 4; s2 <= max_s2 && s2 + 1 <= max_n; ++s2) {
    for (int n = s2 + 1; n <= max_n; ++n) {
      for (int t = 1; t <= ExtremalParams::max_t(s2); ++t) {
        for (int delta = 1; delta <= t; ++delta) out.push_back({n, s2, t, delta});
      }
    }
  }
  return out;
}

std::vector<Motif> motifs(int max_l, int max_r) {
  std::vector<Motif> out;
  for (int l = 2; l <= max_l; ++l) out.push_back(Motif::clique(l));
  for (int r1 = 1; 2 * r1 <= max_r; ++r1) {
    for (int r2 = r1; r1 + r2 <= max_r; ++r2) out.push_back(Motif::biclique(r1, r2));
  }
  return out;
}

// F1 needs a middle clique; F2 needs t <= s, which max_t guarantees.
bool family_applies(Family family, const ExtremalParams& p) {
  return family == Family::dominating || p.middle_order() >= 2;
}

}  // namespace

TEST_CASE("extremal graph examples") {
  const Graph a = build_extremal({5, 4, 2, 1});
  CHECK(a.size() == 6);
  CHECK(min_degree(a) == 1);
  CHECK(nu_star_fast(a) == HalfInt(4));

  const Graph b = build_extremal({6, 5, 1, 1});
  CHECK(b.size() == 8);
  CHECK(nu_star_fast(b) == HalfInt(5));
  CHECK(are_isomorphic(b, join(Graph::complete(1), disjoint_union(Graph::complete(3), Graph(2)))));
  CHECK(nu_star_deficiency(b).witness.removed == 1U);

  const Graph c = build_extremal({7, 4, 2, 2});
  CHECK(c == join(Graph::complete(2), Graph(5)));
  CHECK(c.size() == 11);

  CHECK(to_graph6(build_extremal({7, 4, 2, 1})) == "F}rA?");
}

TEST_CASE("extremal description") {
  const ExtremalDescription d = describe_extremal({7, 4, 2, 1});
  CHECK(d.dominating_order == 2);
  CHECK(d.middle_order == 0);
  CHECK(d.independent_order == 5);
  CHECK(d.pendant_vertex == 6);
  REQUIRE(d.deleted.size() == 1);
  CHECK(d.deleted[0] == Edge{0, 6});

  const auto j = nlohmann::json::parse(d.to_json());
  CHECK(j["parts"]["independent"] == 5);
  CHECK(j["deleted"] == nlohmann::json::parse("[[0,6]]"));

  const ExtremalDescription e = describe_extremal({10, 8, 3, 1});
  CHECK(e.middle_order == 2);
  CHECK(e.deleted == std::vector<Edge>{{0, 9}, {1, 9}});
}

TEST_CASE("construction fidelity for n <= 12") {
  for (const auto& p : all_params(12, 11)) {
    CAPTURE(p.to_string());
    const Graph g = build_extremal(p);
    const DegreeStats stats = degree_stats(g);
    CHECK(g.order() == p.n);
    CHECK(stats.min_degree == p.delta);
    CHECK(stats.max_degree == p.n - 1);
    CHECK(nu_star_fast(g).doubled() == p.s2);
    CHECK(g.degree(p.n - 1) == p.delta);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("construction fidelity against the deficiency formula for n <= 10") {
  for (const auto& p : all_params(10, 9)) {
    CAPTURE(p.to_string());
    CHECK(nu_star_deficiency(build_extremal(p)).nu_star.doubled() == p.s2);
  }
}

TEST_CASE("constructions reject invalid parameters") {
  CHECK_THROWS_AS(build_extremal({6, 5, 2, 1}), Error);
  CHECK_THROWS_AS(build_extremal({5, 5, 1, 1}), Error);
  CHECK_THROWS_AS(build_extremal({7, 4, 1, 2}), Error);
  CHECK_THROWS_AS(describe_extremal({7, 3, 1, 1}), Error);
  CHECK_THROWS_AS(build_extremal({70, 8, 2, 1}), Error);
}

TEST_CASE("family member examples") {
  const Graph f1 = build_family_member({Family::middle, {7, 4, 1, 1}, {1, 0, 0}});
  CHECK(f1.size() == 6);
  CHECK(f1.degree(1) == 1);
  CHECK(f1.has_edge(0, 1));

  const Graph f2 = build_family_member({Family::dominating, {7, 4, 2, 1}, {1, 0, 0}});
  CHECK(f2.size() == 6);
  CHECK(f2.degree(0) == 1);
  CHECK(f2.has_edge(0, 1));

  const Graph f1b = build_family_member({Family::middle, {8, 6, 2, 1}, {0, 1, 0}});
  const int v = family_vertex(Family::middle, {8, 6, 2, 1});
  CHECK(v == 2);
  CHECK(f1b.degree(v) == 1);
  CHECK(f1b.has_edge(2, 3));
}

TEST_CASE("family names") {
  CHECK(parse_family("F1") == Family::middle);
  CHECK(parse_family("dominating") == Family::dominating);
  CHECK(to_string(Family::middle) == "middle");
  CHECK_THROWS_AS(parse_family("F3"), Error);
}

TEST_CASE("family members reject invalid splits") {
  // The middle family needs a nonempty middle clique.
  CHECK_THROWS_AS(build_family_member({Family::middle, {7, 4, 2, 1}, {1, 0, 0}}), Error);
  CHECK_THROWS_AS(family_max_count(Family::middle, {7, 4, 2, 2}, Motif::clique(2)), Error);
  // Split does not sum to delta.
  CHECK_THROWS_AS(build_family_member({Family::dominating, {7, 4, 2, 1}, {1, 1, 0}}), Error);
  // A middle vertex has no independent neighbors.
  CHECK_THROWS_AS(build_family_member({Family::middle, {8, 6, 2, 1}, {0, 0, 1}}), Error);
  // Part capacity: the middle vertex has t dominating neighbors.
  CHECK_THROWS_AS(build_family_member({Family::middle, {8, 6, 1, 1}, {2, 0, 0}}), Error);
  CHECK_THROWS_AS(build_family_member({Family::dominating, {7, 4, 2, 1}, {-1, 2, 0}}), Error);
}

TEST_CASE("family members keep exactly the split") {
  for (const auto& p : all_params(10, 8)) {
    for (const auto family : {Family::middle, Family::dominating}) {
      if (!family_applies(family, p)) continue;
      const JoinLayout layout(p);
      const int v = family_vertex(family, p);
      for (const auto& split : family_splits(family, p)) {
        CAPTURE(p.to_string());
        const Graph g = build_family_member({family, p, split});
        const VertexSet nb = g.neighbors(v);
        auto in_part = [&](int first, int count) {
          return set_size(nb & (((VertexSet{1} << count) - 1) << first));
        };
        CHECK(g.degree(v) == p.delta);
        CHECK(in_part(layout.dominating_first, layout.dominating_order()) == split.dominating);
        CHECK(in_part(layout.middle_first, layout.middle_order()) == split.middle);
        CHECK(in_part(layout.independent_first, layout.independent_order()) == split.independent);
        // Only edges at v are removed.
        const Graph base = build_base_join(p);
        CHECK(base.size() - g.size() == base.degree(v) - p.delta);
      }
    }
  }
}

TEST_CASE("family maximum examples") {
  CHECK(family_max_count(Family::middle, {7, 4, 1, 1}, Motif::clique(2)) == 6);
  CHECK(family_max_count(Family::dominating, {7, 4, 2, 1}, Motif::clique(2)) == 6);
  const Count split_max = family_max_count(Family::dominating, {7, 4, 2, 1}, Motif::biclique(1, 2));
  CHECK(split_max == family_max_count_literal(Family::dominating, {7, 4, 2, 1}, Motif::biclique(1, 2)));
  // Keeping the other dominating vertex beats keeping a leaf.
  CHECK(split_max == count_bicliques(build_family_member({Family::dominating, {7, 4, 2, 1}, {1, 0, 0}}), 1, 2));
  CHECK(split_max == 15);
}

TEST_CASE("split enumeration matches literal neighbor sets") {
  for (const auto& p : all_params(10, 8)) {
    for (const auto family : {Family::middle, Family::dominating}) {
      if (!family_applies(family, p)) continue;
      if (build_base_join(p).degree(family_vertex(family, p)) > kMaxLiteralDegree) continue;
      for (const auto& m : motifs(4, 4)) {
        CAPTURE(p.to_string());
        CAPTURE(m.to_string());
        CHECK(family_max_count(family, p, m) == family_max_count_literal(family, p, m));
      }
    }
  }
}

TEST_CASE("the extremal graph dominates both families") {
  for (const auto& p : all_params(12, 10)) {
    for (const auto family : {Family::middle, Family::dominating}) {
      if (!family_applies(family, p)) continue;
      for (const auto& m : motifs(5, 5)) {
        CAPTURE(p.to_string());
        CAPTURE(m.to_string());
        CHECK(motif_formula(p, m) >= family_max_count(family, p, m));
      }
    }
  }
}
