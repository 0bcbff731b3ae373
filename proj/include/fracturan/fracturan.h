/* C interface to the fracturan library.
 *
 * Conventions:
 *   - Every function returns an ft_status; FT_OK is zero.
 *   - On failure, ft_last_error() describes the error for the calling thread.
 *   - Output strings are allocated by the library and released with
 *     ft_string_free(). Graph handles are released with ft_graph_free().
 *   - Exact counts are returned as decimal strings.
 *   - Half-integral quantities (nu*, s) are passed doubled.
 */
#ifndef FRACTURAN_H
#define FRACTURAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(FRACTURAN_BUILDING_LIBRARY)
#define FT_API __attribute__((visibility("default")))
#else
#define FT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ft_status {
  FT_OK = 0,
  FT_INVALID_ARGUMENT = 1,
  FT_OUT_OF_RANGE = 2,
  FT_GRAPH6_HEADER = 3,
  FT_GRAPH6_PAYLOAD = 4,
  FT_GRAPH6_PADDING = 5,
  FT_GRAPH6_ORDER = 6,
  FT_OVERFLOW = 7,
  FT_IO = 8,
  FT_INTERNAL = 9
} ft_status;

typedef enum ft_verdict {
  FT_VERDICT_EXACT_MATCH = 0,
  FT_VERDICT_BOUND_VIOLATED = 1,
  FT_VERDICT_NO_GRAPHS = 2
} ft_verdict;

typedef enum ft_delta_mode { FT_DELTA_EXACT = 0, FT_DELTA_AT_LEAST = 1 } ft_delta_mode;

typedef enum ft_family { FT_FAMILY_MIDDLE = 0, FT_FAMILY_DOMINATING = 1 } ft_family;

typedef enum ft_convex_family {
  FT_CONVEX_CORE = 0,
  FT_CONVEX_PENDANT = 1,
  FT_CONVEX_BICLIQUE = 2
} ft_convex_family;

typedef struct ft_graph ft_graph;

/* ---- library ---------------------------------------------------------- */

FT_API const char* ft_version(void);
FT_API const char* ft_status_name(ft_status status);
/* Message of the last failed call on this thread ("" if none). */
FT_API const char* ft_last_error(void);
FT_API void ft_string_free(char* text);

/* ---- graphs ----------------------------------------------------------- */

FT_API ft_status ft_graph_empty(int order, ft_graph** out);
/* edges holds edge_count (u, v) pairs. */
FT_API ft_status ft_graph_from_edges(int order, const int* edges, size_t edge_count,
                                     ft_graph** out);
FT_API ft_status ft_graph_from_graph6(const char* text, ft_graph** out);
FT_API ft_status ft_graph_clone(const ft_graph* g, ft_graph** out);
FT_API void ft_graph_free(ft_graph* g);

FT_API int ft_graph_order(const ft_graph* g);
FT_API int ft_graph_size(const ft_graph* g);
FT_API int ft_graph_has_edge(const ft_graph* g, int u, int v);
FT_API ft_status ft_graph_to_graph6(const ft_graph* g, char** out);
/* JSON array [[u,v],...] in graph6 order. */
FT_API ft_status ft_graph_edges_json(const ft_graph* g, char** out);

FT_API ft_status ft_graph_complement(const ft_graph* g, ft_graph** out);
FT_API ft_status ft_graph_join(const ft_graph* g, const ft_graph* h, ft_graph** out);
FT_API ft_status ft_graph_disjoint_union(const ft_graph* g, const ft_graph* h, ft_graph** out);
FT_API ft_status ft_graph_delete_edges(const ft_graph* g, const int* edges, size_t edge_count,
                                       ft_graph** out);
/* sorted_degrees receives order() entries in nondecreasing order; may be NULL. */
FT_API ft_status ft_graph_degree_stats(const ft_graph* g, int* min_degree, int* max_degree,
                                       int* sorted_degrees);
FT_API ft_status ft_graph_isomorphic(const ft_graph* g, const ft_graph* h, int* result);

/* ---- matching --------------------------------------------------------- */

FT_API ft_status ft_nu_star_fast(const ft_graph* g, int64_t* doubled);
/* removed: bitmask of the witness set T; isolated: i(G - T). */
FT_API ft_status ft_nu_star_deficiency(const ft_graph* g, int64_t* doubled, uint64_t* removed,
                                       int* isolated);
/* {"edges":[[u,v,doubled_weight],...],"total_doubled":k} */
FT_API ft_status ft_fractional_certificate(const ft_graph* g, char** json);
FT_API ft_status ft_matching_number(const ft_graph* g, int* result);

/* ---- counting --------------------------------------------------------- */

/* motif: "clique:<l>" or "biclique:<r1>,<r2>". */
FT_API ft_status ft_count(const ft_graph* g, const char* motif, char** decimal);
FT_API ft_status ft_count_cliques(const ft_graph* g, int order, char** decimal);
FT_API ft_status ft_count_oracle(const ft_graph* g, const char* motif, char** decimal);

/* ---- formulas and bounds ---------------------------------------------- */

FT_API ft_status ft_binom(int64_t a, int64_t b, char** decimal);
/* Closed-form motif count of the extremal graph with parameters (n, 2s, t, delta). */
FT_API ft_status ft_motif_formula(int n, int s2, int t, int delta, const char* motif,
                                  char** decimal);
FT_API ft_status ft_motif_bound(int n, int s2, int delta, const char* motif, ft_delta_mode mode,
                                char** decimal);
/* JSON array of {"n","s2","t","delta"} tuples attaining ft_motif_bound. */
FT_API ft_status ft_bound_attaining(int n, int s2, int delta, const char* motif,
                                    ft_delta_mode mode, char** json);
FT_API ft_status ft_bound_min_degree_one(int n, int s2, char** decimal);
FT_API ft_status ft_bound_matching_number(int n, int k, char** decimal);
FT_API ft_status ft_bound_max_degree(int n, int s2, int d, char** decimal);

/* Fields a family does not use are ignored. */
typedef struct ft_convexity_point {
  int n;
  int s2;
  int order;
  int r1;
  int r2;
  int t;
} ft_convexity_point;

FT_API ft_status ft_second_difference(ft_convex_family family, const ft_convexity_point* point,
                                      char** decimal);

/* ---- constructions ---------------------------------------------------- */

FT_API ft_status ft_build_extremal(int n, int s2, int t, int delta, ft_graph** out);
/* {"n","s2","t","delta","parts":{...},"u","deleted":[[a,b],...]} */
FT_API ft_status ft_describe_extremal(int n, int s2, int t, int delta, char** json);

typedef struct ft_split {
  int dominating;
  int middle;
  int independent;
} ft_split;

FT_API ft_status ft_build_family_member(ft_family family, int n, int s2, int t, int delta,
                                        ft_split split, ft_graph** out);
/* literal != 0 enumerates every kept-neighbor set instead of the splits. */
FT_API ft_status ft_family_max_count(ft_family family, int n, int s2, int t, int delta,
                                     const char* motif, int literal, char** decimal);

/* ---- verification ----------------------------------------------------- */

/* Number of graphs the source yields: corpus NULL means native enumeration. */
FT_API ft_status ft_enumerate_count(int n, const char* corpus, uint64_t* count);

/* spec_json: {"theorem":"1.6","n":6,"s2":5,"delta":1,"motif":"clique:2",...}.
 * jobs <= 0 uses the available parallelism. */
FT_API ft_status ft_verify(const char* spec_json, int jobs, char** report_json,
                           ft_verdict* verdict);
/* grid_json: {"family":"pendant","s2":[4,12],"n_offset":[1,6],"order":[2,5]};
 * all_nonnegative may be NULL. */
FT_API ft_status ft_verify_convexity(const char* grid_json, char** report_json,
                                     int* all_nonnegative);
/* config_json: JSON array of verify specs; relative corpus paths resolve
 * against base_dir (may be NULL). Validates every spec before running. csv
 * and any_violation may be NULL. */
FT_API ft_status ft_run_batch(const char* config_json, const char* base_dir, int jobs,
                              char** report_json, char** csv, int* any_violation);

#ifdef __cplusplus
}
#endif

#endif /* FRACTURAN_H */
