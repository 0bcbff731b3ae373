#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fracturan/counting.hpp"
#include "fracturan/formulas.hpp"
#include "fracturan/graph.hpp"

namespace fracturan {

/// Which statement a scan checks.
enum class Theorem {
  matching_number,  // "1.1": e(G) for nu(G) = k
  max_degree,       // "1.2": e(G) for nu*(G) = s, Delta(G) <= d
  min_degree_one,   // "1.4": e(G) for nu*(G) = s, delta(G) >= 1
  cliques,          // "1.6": N(K_l, G) for nu*(G) = s, minimum degree delta
  bicliques,        // "1.9": N(K_{r1,r2}, G), same filter
  nonexistence,     // no graph with nu*(G) = s and minimum degree delta
};

std::string_view theorem_id(Theorem theorem);
Theorem parse_theorem(std::string_view text);

enum class Source { native, graph6 };

std::string_view to_string(Source source);
Source parse_source(std::string_view text);

/// Largest order for native labeled enumeration (2^C(n,2) graphs).
inline constexpr int kMaxNativeOrder = 8;
/// Largest order accepted from a graph6 corpus.
inline constexpr int kMaxScanOrder = 11;
/// Witness lists keep this many lexicographically smallest graph6 strings.
inline constexpr std::size_t kMaxWitnesses = 16;

struct VerifySpec {
  Theorem theorem = Theorem::cliques;
  int n = 0;
  int s2 = 0;
  int delta = 0;
  int k = 0;  // matching number (1.1)
  int d = 0;  // maximum degree (1.2)
  Motif motif = Motif::clique(2);
  DeltaMode delta_mode = DeltaMode::exact;
  Source source = Source::native;
  std::string corpus;  // graph6 file for Source::graph6

  /// Throws ErrorCode::invalid_argument when the parameters are outside the
  /// hypotheses of the chosen statement or the source cannot serve order n.
  void validate() const;

  /// The bound the scan is compared against; empty for nonexistence.
  std::optional<Count> bound() const;

  /// Graphs known to attain the bound (used for witness matching).
  std::vector<Graph> constructions() const;

  nlohmann::ordered_json to_json() const;
  /// Theorems 1.6 and 1.9 need a motif; the edge statements default to
  /// clique:2. Missing delta_mode is exact (at-least for nonexistence) and
  /// missing source is native. Unknown fields are rejected.
  static VerifySpec from_json(const nlohmann::ordered_json& j);
};

enum class Verdict { exact_match, bound_violated, no_graphs };

std::string_view to_string(Verdict verdict);

struct VerificationReport {
  VerifySpec spec;
  std::optional<Count> bound;
  std::optional<Count> observed_max;  // empty when nothing passed the filter
  std::vector<std::string> witnesses;
  std::uint64_t scanned = 0;
  std::uint64_t passed = 0;
  Verdict verdict = Verdict::no_graphs;
  bool witness_matches_construction = false;
  std::int64_t elapsed_ms = 0;

  nlohmann::ordered_json to_json() const;
};

/// Number of graphs a source yields for order n: 2^C(n,2) for native, the
/// number of graph6 lines for a corpus (whose graphs must all have order n).
std::uint64_t enumerate_count(int n, Source source, const std::string& corpus = {});

/// Reads a graph6 corpus. Blank lines are skipped and a ">>graph6<<" header
/// is tolerated; decoding errors carry the line number.
std::vector<Graph> read_corpus(const std::string& path);

/// Runs one exhaustive scan. jobs <= 0 means available parallelism.
VerificationReport verify_bound(const VerifySpec& spec, int jobs = 0);

/// Runs several specs; specs sharing an order and source are answered by a
/// single pass over the graphs. Reports come back in input order.
std::vector<VerificationReport> verify_all(const std::vector<VerifySpec>& specs, int jobs = 0);

/// Scans for graphs with nu* = s2/2 and minimum degree at least delta, where
/// delta exceeds the largest feasible value. Any graph found is a
/// counterexample (verdict bound-violated).
VerificationReport verify_nonexistence(int n, int s2, int delta, int jobs = 0);

// ---------------------------------------------------------------------------
// Convexity sweeps.

struct ConvexityGrid {
  ConvexFamily family = ConvexFamily::core;
  int s2_min = 4;
  int s2_max = 12;
  int n_offset_min = 1;  // n ranges over [s2 + n_offset_min, s2 + n_offset_max]
  int n_offset_max = 6;
  int order_min = 2;  // l, for core and pendant
  int order_max = 5;
  int max_r = 5;  // biclique: 1 <= r1 <= r2, r1 + r2 <= max_r

  static ConvexityGrid defaults(ConvexFamily family);
  void validate() const;

  nlohmann::ordered_json to_json() const;
  static ConvexityGrid from_json(const nlohmann::ordered_json& j);
};

struct ConvexityReport {
  ConvexityGrid grid;
  std::uint64_t points = 0;
  std::optional<SignedCount> min_second_difference;
  ConvexityPoint argmin;
  bool all_nonnegative = true;

  nlohmann::ordered_json to_json() const;
};

/// Second differences at every admissible t of every grid point. The
/// reported minimum is the first one met in grid order.
ConvexityReport verify_convexity(const ConvexityGrid& grid);

}  // namespace fracturan
