#include "fracturan/fracturan.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "fracturan/batch.hpp"
#include "fracturan/constructions.hpp"
#include "fracturan/counting.hpp"
#include "fracturan/error.hpp"
#include "fracturan/formulas.hpp"
#include "fracturan/graph.hpp"
#include "fracturan/matching.hpp"
#include "fracturan/verifier.hpp"

struct ft_graph {
  fracturan::Graph graph;
};

namespace {

using namespace fracturan;

thread_local std::string last_error;

ft_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return FT_INVALID_ARGUMENT;
    case ErrorCode::out_of_range: return FT_OUT_OF_RANGE;
    case ErrorCode::graph6_header: return FT_GRAPH6_HEADER;
    case ErrorCode::graph6_payload: return FT_GRAPH6_PAYLOAD;
    case ErrorCode::graph6_padding: return FT_GRAPH6_PADDING;
    case ErrorCode::graph6_order: return FT_GRAPH6_ORDER;
    case ErrorCode::overflow: return FT_OVERFLOW;
    case ErrorCode::io: return FT_IO;
    case ErrorCode::internal: return FT_INTERNAL;
  }
  return FT_INTERNAL;
}

template <typename Body>
ft_status guarded(Body body) {
  try {
    body();
    last_error.clear();
    return FT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FT_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FT_INTERNAL;
  }
}

void need(const void* pointer, const char* name) {
  if (pointer == nullptr) fail(ErrorCode::invalid_argument, std::string(name) + " is NULL");
}

const Graph& deref(const ft_graph* g) {
  need(g, "graph");
  return g->graph;
}

void put_graph(Graph g, ft_graph** out) {
  need(out, "output graph pointer");
  *out = new ft_graph{std::move(g)};
}

void put_string(const std::string& text, char** out) {
  need(out, "output string pointer");
  char* copy = static_cast<char*>(std::malloc(text.size() + 1));
  if (copy == nullptr) throw std::bad_alloc();
  std::memcpy(copy, text.c_str(), text.size() + 1);
  *out = copy;
}

std::vector<Edge> edge_list(const int* edges, size_t count) {
  if (count > 0) need(edges, "edge array");
  std::vector<Edge> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(Edge::make(edges[2 * i], edges[2 * i + 1]));
  return out;
}

Motif motif_arg(const char* text) {
  need(text, "motif");
  return Motif::parse(text);
}

DeltaMode mode_arg(ft_delta_mode mode) {
  if (mode == FT_DELTA_EXACT) return DeltaMode::exact;
  if (mode == FT_DELTA_AT_LEAST) return DeltaMode::at_least;
  fail(ErrorCode::invalid_argument, "unknown delta mode");
}

Family family_arg(ft_family family) {
  if (family == FT_FAMILY_MIDDLE) return Family::middle;
  if (family == FT_FAMILY_DOMINATING) return Family::dominating;
  fail(ErrorCode::invalid_argument, "unknown family");
}

ConvexFamily convex_arg(ft_convex_family family) {
  switch (family) {
    case FT_CONVEX_CORE: return ConvexFamily::core;
    case FT_CONVEX_PENDANT: return ConvexFamily::pendant;
    case FT_CONVEX_BICLIQUE: return ConvexFamily::biclique;
  }
  fail(ErrorCode::invalid_argument, "unknown convexity family");
}

nlohmann::ordered_json parse_json(const char* text, const char* what) {
  need(text, what);
  try {
    return nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::invalid_argument, std::string(what) + " is not valid JSON: " + e.what());
  }
}

ft_verdict verdict_of(Verdict v) {
  switch (v) {
    case Verdict::exact_match: return FT_VERDICT_EXACT_MATCH;
    case Verdict::bound_violated: return FT_VERDICT_BOUND_VIOLATED;
    case Verdict::no_graphs: return FT_VERDICT_NO_GRAPHS;
  }
  return FT_VERDICT_NO_GRAPHS;
}

}  // namespace

extern "C" {

const char* ft_version(void) { return "0.1.0"; }

const char* ft_status_name(ft_status status) {
  switch (status) {
    case FT_OK: return "ok";
    case FT_INVALID_ARGUMENT: return to_string(ErrorCode::invalid_argument);
    case FT_OUT_OF_RANGE: return to_string(ErrorCode::out_of_range);
    case FT_GRAPH6_HEADER: return to_string(ErrorCode::graph6_header);
    case FT_GRAPH6_PAYLOAD: return to_string(ErrorCode::graph6_payload);
    case FT_GRAPH6_PADDING: return to_string(ErrorCode::graph6_padding);
    case FT_GRAPH6_ORDER: return to_string(ErrorCode::graph6_order);
    case FT_OVERFLOW: return to_string(ErrorCode::overflow);
    case FT_IO: return to_string(ErrorCode::io);
    case FT_INTERNAL: return to_string(ErrorCode::internal);
  }
  return "unknown";
}

const char* ft_last_error(void) { return last_error.c_str(); }

void ft_string_free(char* text) { std::free(text); }

// ---- graphs -----------------------------------------------------------------

ft_status ft_graph_empty(int order, ft_graph** out) {
  return guarded([&] { put_graph(Graph(order), out); });
}

ft_status ft_graph_from_edges(int order, const int* edges, size_t edge_count, ft_graph** out) {
  return guarded([&] { put_graph(Graph::from_edges(order, edge_list(edges, edge_count)), out); });
}

ft_status ft_graph_from_graph6(const char* text, ft_graph** out) {
  return guarded([&] {
    need(text, "graph6 text");
    put_graph(from_graph6(text), out);
  });
}

ft_status ft_graph_clone(const ft_graph* g, ft_graph** out) {
  return guarded([&] { put_graph(deref(g), out); });
}

void ft_graph_free(ft_graph* g) { delete g; }

int ft_graph_order(const ft_graph* g) { return g == nullptr ? -1 : g->graph.order(); }

int ft_graph_size(const ft_graph* g) { return g == nullptr ? -1 : g->graph.size(); }

int ft_graph_has_edge(const ft_graph* g, int u, int v) {
  if (g == nullptr || u < 0 || v < 0 || u >= g->graph.order() || v >= g->graph.order()) return 0;
  return g->graph.has_edge(u, v) ? 1 : 0;
}

ft_status ft_graph_to_graph6(const ft_graph* g, char** out) {
  return guarded([&] { put_string(to_graph6(deref(g)), out); });
}

ft_status ft_graph_edges_json(const ft_graph* g, char** out) {
  return guarded([&] {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : deref(g).edges()) edges.push_back({e.u, e.v});
    put_string(edges.dump(), out);
  });
}

ft_status ft_graph_complement(const ft_graph* g, ft_graph** out) {
  return guarded([&] { put_graph(complement(deref(g)), out); });
}

ft_status ft_graph_join(const ft_graph* g, const ft_graph* h, ft_graph** out) {
  return guarded([&] { put_graph(join(deref(g), deref(h)), out); });
}

ft_status ft_graph_disjoint_union(const ft_graph* g, const ft_graph* h, ft_graph** out) {
  return guarded([&] { put_graph(disjoint_union(deref(g), deref(h)), out); });
}

ft_status ft_graph_delete_edges(const ft_graph* g, const int* edges, size_t edge_count,
                                ft_graph** out) {
  return guarded([&] { put_graph(delete_edges(deref(g), edge_list(edges, edge_count)), out); });
}

ft_status ft_graph_degree_stats(const ft_graph* g, int* min_degree, int* max_degree,
                                int* sorted_degrees) {
  return guarded([&] {
    const DegreeStats stats = degree_stats(deref(g));
    if (min_degree != nullptr) *min_degree = stats.min_degree;
    if (max_degree != nullptr) *max_degree = stats.max_degree;
    if (sorted_degrees != nullptr) {
      std::copy(stats.sorted_degrees.begin(), stats.sorted_degrees.end(), sorted_degrees);
    }
  });
}

ft_status ft_graph_isomorphic(const ft_graph* g, const ft_graph* h, int* result) {
  return guarded([&] {
    need(result, "result");
    *result = are_isomorphic(deref(g), deref(h)) ? 1 : 0;
  });
}

// ---- matching ---------------------------------------------------------------

ft_status ft_nu_star_fast(const ft_graph* g, int64_t* doubled) {
  return guarded([&] {
    need(doubled, "result");
    *doubled = nu_star_fast(deref(g)).doubled();
  });
}

ft_status ft_nu_star_deficiency(const ft_graph* g, int64_t* doubled, uint64_t* removed,
                                int* isolated) {
  return guarded([&] {
    need(doubled, "result");
    const DeficiencyResult r = nu_star_deficiency(deref(g));
    *doubled = r.nu_star.doubled();
    if (removed != nullptr) *removed = r.witness.removed;
    if (isolated != nullptr) *isolated = r.witness.isolated;
  });
}

ft_status ft_fractional_certificate(const ft_graph* g, char** json) {
  return guarded([&] { put_string(fractional_certificate(deref(g)).to_json(), json); });
}

ft_status ft_matching_number(const ft_graph* g, int* result) {
  return guarded([&] {
    need(result, "result");
    *result = matching_number(deref(g));
  });
}

// ---- counting ---------------------------------------------------------------

ft_status ft_count(const ft_graph* g, const char* motif, char** decimal) {
  return guarded([&] { put_string(to_decimal(count_motif(deref(g), motif_arg(motif))), decimal); });
}

ft_status ft_count_cliques(const ft_graph* g, int order, char** decimal) {
  return guarded([&] { put_string(to_decimal(count_cliques(deref(g), order)), decimal); });
}

ft_status ft_count_oracle(const ft_graph* g, const char* motif, char** decimal) {
  return guarded(
      [&] { put_string(to_decimal(count_oracle(deref(g), motif_arg(motif))), decimal); });
}

// ---- formulas and bounds ------------------------------------------------------

ft_status ft_binom(int64_t a, int64_t b, char** decimal) {
  return guarded([&] { put_string(to_decimal(binom(a, b)), decimal); });
}

ft_status ft_motif_formula(int n, int s2, int t, int delta, const char* motif, char** decimal) {
  return guarded([&] {
    put_string(to_decimal(motif_formula({n, s2, t, delta}, motif_arg(motif))), decimal);
  });
}

ft_status ft_motif_bound(int n, int s2, int delta, const char* motif, ft_delta_mode mode,
                         char** decimal) {
  return guarded([&] {
    put_string(to_decimal(motif_bound(n, s2, delta, motif_arg(motif), mode_arg(mode))), decimal);
  });
}

ft_status ft_bound_attaining(int n, int s2, int delta, const char* motif, ft_delta_mode mode,
                             char** json) {
  return guarded([&] {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& p : bound_attaining_params(n, s2, delta, motif_arg(motif), mode_arg(mode))) {
      out.push_back({{"n", p.n}, {"s2", p.s2}, {"t", p.t}, {"delta", p.delta}});
    }
    put_string(out.dump(), json);
  });
}

ft_status ft_bound_min_degree_one(int n, int s2, char** decimal) {
  return guarded([&] { put_string(to_decimal(edge_bound_min_degree_one(n, s2)), decimal); });
}

ft_status ft_bound_matching_number(int n, int k, char** decimal) {
  return guarded([&] { put_string(to_decimal(edge_bound_matching_number(n, k)), decimal); });
}

ft_status ft_bound_max_degree(int n, int s2, int d, char** decimal) {
  return guarded([&] { put_string(to_decimal(edge_bound_max_degree(n, s2, d)), decimal); });
}

ft_status ft_second_difference(ft_convex_family family, const ft_convexity_point* point,
                               char** decimal) {
  return guarded([&] {
    need(point, "point");
    const ConvexityPoint p{point->n, point->s2, point->order, point->r1, point->r2, point->t};
    put_string(to_decimal(second_difference(convex_arg(family), p)), decimal);
  });
}

// ---- constructions ------------------------------------------------------------

ft_status ft_build_extremal(int n, int s2, int t, int delta, ft_graph** out) {
  return guarded([&] { put_graph(build_extremal({n, s2, t, delta}), out); });
}

ft_status ft_describe_extremal(int n, int s2, int t, int delta, char** json) {
  return guarded([&] { put_string(describe_extremal({n, s2, t, delta}).to_json(), json); });
}

ft_status ft_build_family_member(ft_family family, int n, int s2, int t, int delta, ft_split split,
                                 ft_graph** out) {
  return guarded([&] {
    const FamilySpec spec{family_arg(family), {n, s2, t, delta},
                          {split.dominating, split.middle, split.independent}};
    put_graph(build_family_member(spec), out);
  });
}

ft_status ft_family_max_count(ft_family family, int n, int s2, int t, int delta, const char* motif,
                              int literal, char** decimal) {
  return guarded([&] {
    const ExtremalParams p{n, s2, t, delta};
    const Count value = literal != 0
                            ? family_max_count_literal(family_arg(family), p, motif_arg(motif))
                            : family_max_count(family_arg(family), p, motif_arg(motif));
    put_string(to_decimal(value), decimal);
  });
}

// ---- verification -------------------------------------------------------------

ft_status ft_enumerate_count(int n, const char* corpus, uint64_t* count) {
  return guarded([&] {
    need(count, "result");
    *count = corpus == nullptr ? enumerate_count(n, Source::native)
                               : enumerate_count(n, Source::graph6, corpus);
  });
}

ft_status ft_verify(const char* spec_json, int jobs, char** report_json, ft_verdict* verdict) {
  return guarded([&] {
    need(report_json, "output string pointer");
    const VerifySpec spec = VerifySpec::from_json(parse_json(spec_json, "spec"));
    const VerificationReport report = verify_bound(spec, jobs);
    put_string(report.to_json().dump(), report_json);
    if (verdict != nullptr) *verdict = verdict_of(report.verdict);
  });
}

ft_status ft_verify_convexity(const char* grid_json, char** report_json, int* all_nonnegative) {
  return guarded([&] {
    need(report_json, "output string pointer");
    const ConvexityReport report =
        verify_convexity(ConvexityGrid::from_json(parse_json(grid_json, "grid")));
    put_string(report.to_json().dump(), report_json);
    if (all_nonnegative != nullptr) *all_nonnegative = report.all_nonnegative ? 1 : 0;
  });
}

ft_status ft_run_batch(const char* config_json, const char* base_dir, int jobs,
                       char** report_json, char** csv, int* any_violation) {
  return guarded([&] {
    need(config_json, "config");
    need(report_json, "output string pointer");
    const auto specs = parse_batch_config(config_json, base_dir == nullptr ? "" : base_dir);
    const BatchResult result = run_batch(specs, jobs);
    const std::string report = result.to_json().dump();
    const std::string table = result.to_csv();
    put_string(report, report_json);
    if (csv != nullptr) {
      try {
        put_string(table, csv);
      } catch (...) {
        std::free(*report_json);
        *report_json = nullptr;
        throw;
      }
    }
    if (any_violation != nullptr) *any_violation = result.any_violation ? 1 : 0;
  });
}

}  // extern "C"
