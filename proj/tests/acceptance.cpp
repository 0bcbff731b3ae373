// Acceptance criteria: one PASS/FAIL line each. Exits nonzero when a
// criterion fails that is not listed in kExpectedFailures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "fracturan/constructions.hpp"
#include "fracturan/matching.hpp"
#include "fracturan/verifier.hpp"
#include "support.hpp"

using namespace fracturan;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Criteria that cannot hold as written, with the reason.
const std::map<int, std::string> kExpectedFailures{
    {8, "the literal reduction contradicts the known clique_bound(7,4,1,2) = 10 "
        "against edge_bound_min_degree_one(7,4) = 11"},
};

std::vector<VerifySpec> motif_grid(int n_min, int n_max, bool bicliques, const std::string& corpus) {
  std::vector<VerifySpec> specs;
  for (int n = n_min; n <= n_max; ++n) {
    for (int s2 = 4; s2 <= 6; ++s2) {
      if (n < s2 + 1) continue;
      for (int delta = 1; delta <= ExtremalParams::max_t(s2); ++delta) {
        const std::vector<Motif> motifs =
            bicliques ? std::vector<Motif>{Motif::biclique(1, 1), Motif::biclique(1, 2), Motif::biclique(2, 2)}
                      : std::vector<Motif>{Motif::clique(2), Motif::clique(3), Motif::clique(4)};
        for (const auto& m : motifs) {
          VerifySpec s;
          s.theorem = bicliques ? Theorem::bicliques : Theorem::cliques;
          s.n = n;
          s.s2 = s2;
          s.delta = delta;
          s.motif = m;
          if (!corpus.empty()) {
            s.source = Source::graph6;
            s.corpus = corpus;
          }
          specs.push_back(s);
        }
      }
    }
  }
  return specs;
}

Outcome all_exact(const std::vector<VerifySpec>& specs) {
  Outcome o;
  int matched = 0, witnessed = 0;
  for (const auto& r : verify_all(specs)) {
    if (r.verdict == Verdict::exact_match) {
      ++matched;
    } else if (o.pass) {
      o.pass = false;
      o.detail = "first mismatch " + r.spec.to_json().dump() + " -> " + std::string(to_string(r.verdict)) + "; ";
    }
    if (r.witness_matches_construction) ++witnessed;
  }
  o.detail += std::to_string(matched) + "/" + std::to_string(specs.size()) + " exact-match, " +
              std::to_string(witnessed) + " with a witness isomorphic to the construction";
  return o;
}

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

std::vector<Motif> motifs_up_to(int max_l, int max_r) {
  std::vector<Motif> out;
  for (int l = 2; l <= max_l; ++l) out.push_back(Motif::clique(l));
  for (int r1 = 1; 2 * r1 <= max_r; ++r1) {
    for (int r2 = r1; r1 + r2 <= max_r; ++r2) out.push_back(Motif::biclique(r1, r2));
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome criterion_1() { return all_exact(motif_grid(5, 7, false, "")); }

Outcome criterion_2() { return all_exact(motif_grid(5, 7, true, "")); }

Outcome criterion_3() {
  Outcome o;
  const std::string corpus = testing::data_path("data/graph8.g6");
  const auto graphs = read_corpus(corpus);
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].order() != 8) return {false, "corpus graph of order " + std::to_string(graphs[i].order())};
    buckets[degree_stats(graphs[i]).sorted_degrees].push_back(i);
  }
  std::size_t duplicates = 0;
  for (const auto& [key, members] : buckets) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (are_isomorphic(graphs[members[a]], graphs[members[b]])) ++duplicates;
      }
    }
  }
  if (graphs.size() != 12346 || duplicates != 0) {
    return {false, std::to_string(graphs.size()) + " graphs, " + std::to_string(duplicates) + " isomorphic pairs"};
  }
  auto specs = motif_grid(8, 8, false, corpus);
  const auto more = motif_grid(8, 8, true, corpus);
  specs.insert(specs.end(), more.begin(), more.end());
  o = all_exact(specs);
  o.detail = "corpus of 12346 pairwise non-isomorphic graphs; " + o.detail;
  return o;
}

Outcome criterion_4() {
  std::size_t checks = 0;
  for (const auto& p : all_params(12, 11)) {
    const Graph g = build_extremal(p);
    for (int l = 2; l <= 6; ++l) {
      ++checks;
      if (clique_formula(p, l) != count_oracle(g, Motif::clique(l))) {
        return {false, "clique:" + std::to_string(l) + " at " + p.to_string()};
      }
    }
    for (int r1 = 1; 2 * r1 <= 5; ++r1) {
      for (int r2 = r1; r1 + r2 <= 5; ++r2) {
        ++checks;
        if (biclique_formula(p, r1, r2) != count_oracle(g, Motif::biclique(r1, r2))) {
          return {false, "biclique:" + std::to_string(r1) + "," + std::to_string(r2) + " at " + p.to_string()};
        }
      }
    }
  }
  return {true, std::to_string(checks) + " formula values equal brute-force counts"};
}

Outcome criterion_5() {
  auto check = [](const Graph& g) -> std::string {
    const HalfInt fast = nu_star_fast(g);
    if (fast != nu_star_deficiency(g).nu_star) return "methods disagree on " + to_graph6(g);
    const FractionalCertificate c = fractional_certificate(g);
    if (!c.feasible_for(g) || c.total_doubled != fast.doubled()) return "bad certificate for " + to_graph6(g);
    for (const auto& e : c.entries) {
      if (e.doubled_weight < 0 || e.doubled_weight > 2) return "non-half-integral weight on " + to_graph6(g);
    }
    return {};
  };
  std::size_t graphs = 0;
  std::string error;
  testing::for_each_labeled(6, [&](const Graph& g) {
    ++graphs;
    if (error.empty()) error = check(g);
  });
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 10000 && error.empty(); ++i, ++graphs) error = check(testing::random_graph(rng, 1, 12));
  if (!error.empty()) return {false, error};
  return {true, std::to_string(graphs) + " graphs: both methods agree, certificates feasible and optimal"};
}

Outcome criterion_6() {
  Outcome o;
  std::uint64_t points = 0;
  for (const auto family : {ConvexFamily::core, ConvexFamily::pendant, ConvexFamily::biclique}) {
    const auto r = verify_convexity(ConvexityGrid::defaults(family));
    points += r.points;
    if (!r.all_nonnegative) {
      return {false, std::string(to_string(family)) + " has second difference " + to_decimal(*r.min_second_difference)};
    }
  }
  std::size_t scans = 0;
  for (int s2 = 4; s2 <= 12; ++s2) {
    for (int n = s2 + 1; n <= s2 + 6; ++n) {
      for (int delta = 1; delta <= ExtremalParams::max_t(s2); ++delta) {
        for (const auto& m : motifs_up_to(5, 5)) {
          ++scans;
          if (formula_scan_max(n, s2, delta, m) != motif_bound(n, s2, delta, m)) {
            return {false, "t-scan maximum differs from the endpoint bound at n=" + std::to_string(n) +
                               " s2=" + std::to_string(s2) + " delta=" + std::to_string(delta) + " " + m.to_string()};
          }
        }
      }
    }
  }
  return {true, std::to_string(points) + " second differences >= 0; " + std::to_string(scans) +
                    " t-scan maxima equal the endpoint bound"};
}

Outcome criterion_7() {
  std::size_t dominance = 0, literal = 0;
  for (const auto& p : all_params(12, 10)) {
    for (const auto family : {Family::middle, Family::dominating}) {
      if (family == Family::middle && p.middle_order() < 2) continue;
      for (const auto& m : motifs_up_to(5, 5)) {
        ++dominance;
        if (motif_formula(p, m) < family_max_count(family, p, m)) {
          return {false, std::string(to_string(family)) + " family beats the construction at " + p.to_string() +
                             " " + m.to_string()};
        }
      }
      if (p.n > 10 || build_base_join(p).degree(family_vertex(family, p)) > kMaxLiteralDegree) continue;
      for (const auto& m : motifs_up_to(4, 4)) {
        ++literal;
        if (family_max_count(family, p, m) != family_max_count_literal(family, p, m)) {
          return {false, "split and literal maxima differ at " + p.to_string() + " " + m.to_string()};
        }
      }
    }
  }
  return {true, std::to_string(dominance) + " dominance checks, " + std::to_string(literal) +
                    " split-versus-literal checks"};
}

Outcome criterion_8() {
  Outcome o;
  std::size_t literal_mismatches = 0, at_least_mismatches = 0, tuples = 0;
  std::string first;
  for (int s2 = 4; s2 <= 12; ++s2) {
    for (int n = s2 + 1; n <= 30; ++n) {
      ++tuples;
      const Count edge_bound = edge_bound_min_degree_one(n, s2);
      if (clique_bound(n, s2, 1, 2) != edge_bound) {
        if (first.empty()) {
          first = "(" + std::to_string(n) + "," + std::to_string(s2) + "): " + to_decimal(clique_bound(n, s2, 1, 2)) +
                  " vs " + to_decimal(edge_bound);
        }
        ++literal_mismatches;
      }
      if (clique_bound(n, s2, 1, 2, DeltaMode::at_least) != edge_bound) ++at_least_mismatches;
    }
  }
  o.pass = literal_mismatches == 0 && at_least_mismatches == 0;
  o.detail = "literal reduction fails on " + std::to_string(literal_mismatches) + "/" + std::to_string(tuples) +
             " tuples" + (first.empty() ? "" : " (first " + first + ")") + "; minimum degree at least 1 fails on " +
             std::to_string(at_least_mismatches) + "; ";

  std::vector<VerifySpec> specs;
  for (int n = 5; n <= 7; ++n) {
    for (int k = 1; k <= 2; ++k) {
      VerifySpec s;
      s.theorem = Theorem::matching_number;
      s.n = n;
      s.k = k;
      specs.push_back(s);
    }
    for (int s2 = 4; s2 <= 5; ++s2) {
      if (n < s2 + 1) continue;  // the statement needs n > 2s
      for (int d = 2; d <= 4; ++d) {
        VerifySpec s;
        s.theorem = Theorem::max_degree;
        s.n = n;
        s.s2 = s2;
        s.d = d;
        specs.push_back(s);
      }
    }
  }
  const Outcome scans = all_exact(specs);
  o.pass = o.pass && scans.pass;
  o.detail += "matching-number and maximum-degree scans: " + scans.detail;
  return o;
}

Outcome criterion_9() {
  for (const auto& [n, s2, delta] : {std::tuple{6, 5, 2}, {7, 5, 2}, {7, 4, 3}}) {
    const auto r = verify_nonexistence(n, s2, delta);
    if (r.verdict != Verdict::no_graphs || r.passed != 0) {
      return {false, "counterexample " + r.witnesses.front()};
    }
  }
  return {true, "no qualifying graph at (6,5,2), (7,5,2), (7,4,3)"};
}

Outcome criterion_10() {
  const std::vector<std::pair<std::string, std::pair<Count, Count>>> values{
      {"edge_bound_matching_number(7,2)", {edge_bound_matching_number(7, 2), 11}},
      {"edge_bound_max_degree(5,4,3)", {edge_bound_max_degree(5, 4, 3), 6}},
      {"edge_bound_max_degree(7,4,4)", {edge_bound_max_degree(7, 4, 4), 8}},
      {"edge_bound_min_degree_one(7,4)", {edge_bound_min_degree_one(7, 4), 11}},
      {"edge_bound_min_degree_one(6,5)", {edge_bound_min_degree_one(6, 5), 8}},
  };
  for (const auto& [name, v] : values) {
    if (v.first != v.second) return {false, name + " = " + to_decimal(v.first)};
  }
  return {true, "5 spot values reproduced"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "clique bound, exhaustive n <= 7", 900, criterion_1},
      {2, "biclique bound, exhaustive n <= 7", 1200, criterion_2},
      {3, "corpus extension to n = 8", 600, criterion_3},
      {4, "formula fidelity", 300, criterion_4},
      {5, "matching oracle equivalence", 300, criterion_5},
      {6, "convexity sweeps", 60, criterion_6},
      {7, "dominance", 300, criterion_7},
      {8, "reductions and regressions", 600, criterion_8},
      {9, "nonexistence", 300, criterion_9},
      {10, "spot values", 60, criterion_10},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_s) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    const auto expected = kExpectedFailures.find(c.id);
    std::string note;
    if (!o.pass && expected != kExpectedFailures.end()) {
      note = " [expected: " + expected->second + "]";
    } else if (!o.pass) {
      ++unexpected;
    }
    std::printf("%s criterion %d (%s): %s (%.1f s, limit %.0f s)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), seconds, c.limit_s, note.c_str());
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
