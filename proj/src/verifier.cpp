#include "fracturan/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "fracturan/constructions.hpp"
#include "fracturan/error.hpp"
#include "fracturan/matching.hpp"

namespace fracturan {

using json = nlohmann::ordered_json;

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

bool uses_edges_only(Theorem theorem) {
  return theorem == Theorem::matching_number || theorem == Theorem::max_degree ||
         theorem == Theorem::min_degree_one;
}

// Graph6 payload bits as one integer (first pair in column order is the most
// significant bit). For a fixed order this sorts exactly like the graph6 text.
std::uint64_t graph6_key(const Graph& g) {
  std::uint64_t key = 0;
  for (int v = 1; v < g.order(); ++v) {
    for (int u = 0; u < v; ++u) key = (key << 1) | (g.has_edge(u, v) ? 1U : 0U);
  }
  return key;
}

Graph graph_from_key(int n, std::uint64_t key) {
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if ((key >> --bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

struct Signature {
  int edges = 0;
  std::vector<int> degrees;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const Graph& g) { return {g.size(), degree_stats(g).sorted_degrees}; }

// One spec inside a shared scan.
struct Item {
  VerifySpec spec;
  std::size_t motif_slot = 0;
  std::vector<Graph> constructions;
  std::vector<Signature> signatures;

  bool matches_construction(const Graph& g) const {
    if (constructions.empty()) return false;
    const Signature sig = signature(g);
    for (std::size_t i = 0; i < constructions.size(); ++i) {
      if (signatures[i] == sig && are_isomorphic(g, constructions[i])) return true;
    }
    return false;
  }
};

// Per-graph quantities, computed on first use.
class Probe {
 public:
  Probe(const Graph& g, std::size_t motif_slots) : g_(g), counts_(motif_slots) {
    if (g.order() > 0) {
      VertexSet all = g.vertices();
      min_deg_ = g.order();
      while (all != 0) {
        const int d = g.degree(std::countr_zero(all));
        all &= all - 1;
        min_deg_ = std::min(min_deg_, d);
        max_deg_ = std::max(max_deg_, d);
      }
    }
  }

  const Graph& graph() const { return g_; }
  int min_degree() const { return min_deg_; }
  int max_degree() const { return max_deg_; }

  std::int64_t nu_star_doubled() {
    if (!nu2_) nu2_ = nu_star_fast(g_).doubled();
    return *nu2_;
  }

  int matching() {
    if (!nu_) nu_ = matching_number(g_);
    return *nu_;
  }

  u128 count(std::size_t slot, const Motif& motif) {
    auto& cached = counts_[slot];
    if (!cached) cached = detail::motif_count_native(g_, motif);
    return *cached;
  }

 private:
  const Graph& g_;
  int min_deg_ = 0;
  int max_deg_ = 0;
  std::optional<std::int64_t> nu2_;
  std::optional<int> nu_;
  std::vector<std::optional<u128>> counts_;
};

bool degree_ok(const VerifySpec& spec, int min_deg) {
  return spec.delta_mode == DeltaMode::exact ? min_deg == spec.delta : min_deg >= spec.delta;
}

bool passes(const VerifySpec& spec, Probe& probe) {
  switch (spec.theorem) {
    case Theorem::matching_number:
      return probe.matching() == spec.k;
    case Theorem::max_degree:
      return probe.max_degree() <= spec.d && probe.nu_star_doubled() == spec.s2;
    case Theorem::min_degree_one:
      return probe.min_degree() >= 1 && probe.nu_star_doubled() == spec.s2;
    case Theorem::cliques:
    case Theorem::bicliques:
    case Theorem::nonexistence:
      return degree_ok(spec, probe.min_degree()) && probe.nu_star_doubled() == spec.s2;
  }
  return false;
}

// Scan state for one spec over one partition. Merging is associative and
// commutative.
struct Partial {
  bool any = false;
  u128 max = 0;
  std::vector<std::uint64_t> witnesses;  // sorted graph6 keys at the current max
  std::uint64_t passed = 0;
  bool matched = false;

  void add_witness(std::uint64_t key) {
    auto it = std::lower_bound(witnesses.begin(), witnesses.end(), key);
    if (it != witnesses.end() && *it == key) return;
    if (witnesses.size() == kMaxWitnesses) {
      if (it == witnesses.end()) return;
      witnesses.pop_back();
    }
    witnesses.insert(it, key);
  }

  void offer(u128 value, const Graph& g, const Item& item) {
    ++passed;
    if (!any || value > max) {
      any = true;
      max = value;
      witnesses.assign(1, graph6_key(g));
      matched = item.matches_construction(g);
    } else if (value == max) {
      add_witness(graph6_key(g));
      if (!matched) matched = item.matches_construction(g);
    }
  }

  void merge(const Partial& other) {
    passed += other.passed;
    if (!other.any) return;
    if (!any || other.max > max) {
      const std::uint64_t keep = passed;
      *this = other;
      passed = keep;
    } else if (other.max == max) {
      for (const auto key : other.witnesses) add_witness(key);
      matched = matched || other.matched;
    }
  }
};

constexpr std::uint64_t kSpotCheckMask = (1U << 12) - 1;

struct Worker {
  const std::vector<Item>* items = nullptr;
  const std::vector<Motif>* motifs = nullptr;
  std::vector<Partial> partials;

  void visit(const Graph& g, std::uint64_t index) {
    Probe probe(g, motifs->size());
    if ((index & kSpotCheckMask) == 0 && g.order() <= kMaxDeficiencyOrder) {
      const auto slow = nu_star_deficiency(g).nu_star.doubled();
      if (slow != probe.nu_star_doubled()) {
        fail(ErrorCode::internal, "nu* cross-check failed on " + to_graph6(g) + ": scan " +
                                      std::to_string(probe.nu_star_doubled()) +
                                      "/2, deficiency " + std::to_string(slow) + "/2");
      }
    }
    for (std::size_t i = 0; i < items->size(); ++i) {
      const Item& item = (*items)[i];
      if (!passes(item.spec, probe)) continue;
      const u128 value = item.spec.theorem == Theorem::nonexistence
                             ? 0
                             : probe.count(item.motif_slot, item.spec.motif);
      partials[i].offer(value, g, item);
    }
  }
};

// Runs `body(worker, chunk)` for chunk in [0, chunks) across `jobs` threads.
template <typename Body>
std::vector<Worker> run_partitioned(std::uint64_t chunks, int jobs, const std::vector<Item>& items,
                                    const std::vector<Motif>& motifs, Body body) {
  const int threads = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(resolve_jobs(jobs)), std::max<std::uint64_t>(chunks, 1)));
  std::vector<Worker> workers(static_cast<std::size_t>(threads));
  for (auto& w : workers) {
    w.items = &items;
    w.motifs = &motifs;
    w.partials.resize(items.size());
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&](Worker& w) {
    try {
      for (std::uint64_t c = next++; c < chunks; c = next++) body(w, c);
    } catch (...) {
      const std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = chunks;
    }
  };
  if (threads == 1) {
    run(workers.front());
  } else {
    std::vector<std::thread> pool;
    for (auto& w : workers) pool.emplace_back(run, std::ref(w));
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return workers;
}

std::vector<Worker> scan_native(int n, int jobs, const std::vector<Item>& items,
                                const std::vector<Motif>& motifs) {
  std::vector<Edge> pairs;  // graph6 column order; bit i of a mask is pairs[i]
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) pairs.push_back({u, v});
  }
  const int m = static_cast<int>(pairs.size());
  const int low = std::min(m, 12);
  const std::uint64_t chunks = std::uint64_t{1} << (m - low);

  return run_partitioned(chunks, jobs, items, motifs, [&](Worker& w, std::uint64_t chunk) {
    Graph prefix(n);
    for (int i = low; i < m; ++i) {
      if ((chunk >> (i - low)) & 1U) prefix.add_edge(pairs[i].u, pairs[i].v);
    }
    const std::uint64_t span = std::uint64_t{1} << low;
    for (std::uint64_t mask = 0; mask < span; ++mask) {
      Graph g = prefix;
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        const auto& e = pairs[static_cast<std::size_t>(std::countr_zero(bits))];
        g.add_edge(e.u, e.v);
      }
      w.visit(g, (chunk << low) | mask);
    }
  });
}

std::vector<Worker> scan_graphs(const std::vector<Graph>& graphs, int jobs,
                                const std::vector<Item>& items, const std::vector<Motif>& motifs) {
  constexpr std::uint64_t kChunk = 256;
  const std::uint64_t chunks = (graphs.size() + kChunk - 1) / kChunk;
  return run_partitioned(chunks, jobs, items, motifs, [&](Worker& w, std::uint64_t chunk) {
    const std::uint64_t end = std::min<std::uint64_t>(graphs.size(), (chunk + 1) * kChunk);
    for (std::uint64_t i = chunk * kChunk; i < end; ++i) w.visit(graphs[i], i);
  });
}

Count native_total(int n) { return Count(1) << (n * (n - 1) / 2); }

std::vector<Graph> load_corpus(const std::string& path, int n) {
  auto graphs = read_corpus(path);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].order() != n) {
      fail(ErrorCode::io, path + ": graph " + std::to_string(i + 1) + " has order " +
                              std::to_string(graphs[i].order()) + ", expected " +
                              std::to_string(n));
    }
  }
  return graphs;
}

int get_int(const json& j, const char* key) {
  const auto& v = j.at(key);
  require(v.is_number_integer(), std::string("field '") + key + "' must be an integer");
  const auto value = v.get<std::int64_t>();
  require(value >= -1'000'000 && value <= 1'000'000,
          std::string("field '") + key + "' is out of range");
  return static_cast<int>(value);
}

std::string get_string(const json& j, const char* key) {
  const auto& v = j.at(key);
  require(v.is_string(), std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

void check_keys(const json& j, std::initializer_list<std::string_view> allowed, const char* what) {
  require(j.is_object(), std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(ErrorCode::invalid_argument, std::string("unknown field '") + key + "' in " + what);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view theorem_id(Theorem theorem) {
  switch (theorem) {
    case Theorem::matching_number: return "1.1";
    case Theorem::max_degree: return "1.2";
    case Theorem::min_degree_one: return "1.4";
    case Theorem::cliques: return "1.6";
    case Theorem::bicliques: return "1.9";
    case Theorem::nonexistence: return "nonexistence";
  }
  return "1.6";
}

Theorem parse_theorem(std::string_view text) {
  for (const auto t : {Theorem::matching_number, Theorem::max_degree, Theorem::min_degree_one,
                       Theorem::cliques, Theorem::bicliques, Theorem::nonexistence}) {
    if (text == theorem_id(t)) return t;
  }
  fail(ErrorCode::invalid_argument, "theorem must be one of 1.1, 1.2, 1.4, 1.6, 1.9, "
                                    "nonexistence (got '" + std::string(text) + "')");
}

std::string_view to_string(Source source) {
  return source == Source::native ? "native" : "graph6";
}

Source parse_source(std::string_view text) {
  if (text == "native") return Source::native;
  if (text == "graph6") return Source::graph6;
  fail(ErrorCode::invalid_argument, "source must be 'native' or 'graph6'");
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::exact_match: return "exact-match";
    case Verdict::bound_violated: return "bound-violated";
    case Verdict::no_graphs: return "no-graphs";
  }
  return "no-graphs";
}

void VerifySpec::validate() const {
  require(n >= 1, "n must be at least 1");
  if (source == Source::native) {
    require(n <= kMaxNativeOrder, "native enumeration supports n <= " +
                                      std::to_string(kMaxNativeOrder) + " (got " +
                                      std::to_string(n) + "); use a graph6 corpus");
    require(corpus.empty(), "a corpus path needs source graph6");
  } else {
    require(n <= kMaxScanOrder, "graph6 scans support n <= " + std::to_string(kMaxScanOrder));
    require(!corpus.empty(), "source graph6 needs a corpus path");
  }

  switch (theorem) {
    case Theorem::matching_number:
    case Theorem::max_degree:
    case Theorem::min_degree_one:
      require(motif == Motif::clique(2), "edge-count statements use motif clique:2");
      break;
    case Theorem::cliques:
      require(motif.is_clique(), "theorem 1.6 needs a clique motif");
      break;
    case Theorem::bicliques:
      require(!motif.is_clique(), "theorem 1.9 needs a biclique motif");
      break;
    case Theorem::nonexistence:
      require(s2 >= 4 && n >= s2 + 1, "nonexistence needs n >= 2s + 1 >= 5");
      require(delta > ExtremalParams::max_t(s2),
              "nonexistence needs delta above the feasible cap " +
                  std::to_string(ExtremalParams::max_t(s2)) + " for 2s = " + std::to_string(s2));
      break;
  }
  if (theorem == Theorem::matching_number) {
    require(n <= kMaxBranchingOrder, "matching-number scans need n <= " +
                                         std::to_string(kMaxBranchingOrder));
  }
  (void)bound();  // the evaluators reject tuples outside the hypotheses
}

std::optional<Count> VerifySpec::bound() const {
  switch (theorem) {
    case Theorem::matching_number: return edge_bound_matching_number(n, k);
    case Theorem::max_degree: return edge_bound_max_degree(n, s2, d);
    case Theorem::min_degree_one: return edge_bound_min_degree_one(n, s2);
    case Theorem::cliques:
    case Theorem::bicliques: return motif_bound(n, s2, delta, motif, delta_mode);
    case Theorem::nonexistence: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Graph> VerifySpec::constructions() const {
  std::vector<Graph> out;
  switch (theorem) {
    case Theorem::matching_number: {
      const Count target = *bound();
      const Graph dense = disjoint_union(Graph::complete(2 * k + 1), Graph(n - 2 * k - 1));
      const Graph star = join(Graph::complete(k), Graph(n - k));
      for (const Graph& g : {dense, star}) {
        if (Count(g.size()) == target) out.push_back(g);
      }
      break;
    }
    case Theorem::min_degree_one: {
      const Count target = *bound();
      for (const auto& p : bound_attaining_params(n, s2, 1, Motif::clique(2), DeltaMode::at_least)) {
        if (clique_formula(p, 2) == target) out.push_back(build_extremal(p));
      }
      break;
    }
    case Theorem::cliques:
    case Theorem::bicliques:
      for (const auto& p : bound_attaining_params(n, s2, delta, motif, delta_mode)) {
        out.push_back(build_extremal(p));
      }
      break;
    case Theorem::max_degree:
    case Theorem::nonexistence:
      break;
  }
  return out;
}

json VerifySpec::to_json() const {
  json j;
  j["theorem"] = theorem_id(theorem);
  j["n"] = n;
  switch (theorem) {
    case Theorem::matching_number:
      j["k"] = k;
      break;
    case Theorem::max_degree:
      j["s2"] = s2;
      j["d"] = d;
      break;
    case Theorem::min_degree_one:
      j["s2"] = s2;
      break;
    case Theorem::cliques:
    case Theorem::bicliques:
      j["s2"] = s2;
      j["delta"] = delta;
      j["motif"] = motif.to_string();
      j["delta_mode"] = to_string(delta_mode);
      break;
    case Theorem::nonexistence:
      j["s2"] = s2;
      j["delta"] = delta;
      j["delta_mode"] = to_string(delta_mode);
      break;
  }
  j["source"] = to_string(source);
  if (source == Source::graph6) j["corpus"] = corpus;
  return j;
}

VerifySpec VerifySpec::from_json(const json& j) {
  check_keys(j, {"theorem", "n", "s2", "delta", "k", "d", "motif", "delta_mode", "source", "corpus"},
             "verify spec");
  try {
    VerifySpec spec;
    spec.theorem = parse_theorem(get_string(j, "theorem"));
    spec.n = get_int(j, "n");
    auto need = [&](const char* key, int& field) {
      require(j.contains(key), std::string("theorem ") + std::string(theorem_id(spec.theorem)) +
                                   " needs field '" + key + "'");
      field = get_int(j, key);
    };
    auto forbid = [&](const char* key) {
      require(!j.contains(key), std::string("field '") + key + "' does not apply to theorem " +
                                    std::string(theorem_id(spec.theorem)));
    };
    switch (spec.theorem) {
      case Theorem::matching_number:
        need("k", spec.k);
        for (const char* key : {"s2", "delta", "d", "delta_mode"}) forbid(key);
        break;
      case Theorem::max_degree:
        need("s2", spec.s2);
        need("d", spec.d);
        for (const char* key : {"k", "delta", "delta_mode"}) forbid(key);
        break;
      case Theorem::min_degree_one:
        need("s2", spec.s2);
        for (const char* key : {"k", "d", "delta", "delta_mode"}) forbid(key);
        break;
      case Theorem::cliques:
      case Theorem::bicliques:
      case Theorem::nonexistence:
        need("s2", spec.s2);
        need("delta", spec.delta);
        for (const char* key : {"k", "d"}) forbid(key);
        break;
    }
    if (spec.theorem == Theorem::nonexistence) {
      forbid("motif");
      spec.delta_mode = DeltaMode::at_least;
    } else if (j.contains("motif")) {
      spec.motif = Motif::parse(get_string(j, "motif"));
    } else {
      require(uses_edges_only(spec.theorem), "theorem " +
                                                 std::string(theorem_id(spec.theorem)) +
                                                 " needs field 'motif'");
    }
    if (j.contains("delta_mode")) spec.delta_mode = parse_delta_mode(get_string(j, "delta_mode"));
    if (j.contains("source")) spec.source = parse_source(get_string(j, "source"));
    if (j.contains("corpus")) spec.corpus = get_string(j, "corpus");
    return spec;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::invalid_argument, std::string("malformed verify spec: ") + e.what());
  }
}

json VerificationReport::to_json() const {
  json j;
  j["spec"] = spec.to_json();
  j["bound"] = bound ? json(to_decimal(*bound)) : json(nullptr);
  j["observed_max"] = observed_max ? json(to_decimal(*observed_max)) : json(nullptr);
  j["witnesses"] = witnesses;
  j["scanned"] = scanned;
  j["passed"] = passed;
  j["verdict"] = to_string(verdict);
  j["witness_matches_construction"] = witness_matches_construction;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::vector<Graph> read_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open corpus '" + path + "'");
  std::vector<Graph> graphs;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto last = line.find_last_not_of(" \t\r\n");
    if (last == std::string::npos) continue;
    line.erase(last + 1);
    try {
      graphs.push_back(from_graph6(line));
    } catch (const Error& e) {
      fail(e.code(), path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  if (in.bad()) fail(ErrorCode::io, "read error on corpus '" + path + "'");
  return graphs;
}

std::uint64_t enumerate_count(int n, Source source, const std::string& corpus) {
  if (source == Source::native) {
    require(n >= 1 && n <= kMaxNativeOrder,
            "native enumeration supports 1 <= n <= " + std::to_string(kMaxNativeOrder));
    return native_total(n).convert_to<std::uint64_t>();
  }
  return load_corpus(corpus, n).size();
}

std::vector<VerificationReport> verify_all(const std::vector<VerifySpec>& specs, int jobs) {
  for (const auto& spec : specs) spec.validate();

  // Group by (n, source, corpus), preserving first-seen order.
  std::map<std::tuple<int, Source, std::string>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    groups[{specs[i].n, specs[i].source, specs[i].corpus}].push_back(i);
  }

  std::vector<VerificationReport> reports(specs.size());
  for (const auto& [key, members] : groups) {
    const auto start = std::chrono::steady_clock::now();
    const int n = std::get<0>(key);

    std::vector<Motif> motifs;
    std::vector<Item> items;
    for (const auto index : members) {
      Item item;
      item.spec = specs[index];
      auto it = std::find(motifs.begin(), motifs.end(), item.spec.motif);
      item.motif_slot = static_cast<std::size_t>(it - motifs.begin());
      if (it == motifs.end()) motifs.push_back(item.spec.motif);
      item.constructions = item.spec.constructions();
      for (const auto& g : item.constructions) item.signatures.push_back(signature(g));
      items.push_back(std::move(item));
    }

    std::uint64_t scanned = 0;
    std::vector<Worker> workers;
    if (std::get<1>(key) == Source::native) {
      workers = scan_native(n, jobs, items, motifs);
      scanned = native_total(n).convert_to<std::uint64_t>();
    } else {
      const auto graphs = load_corpus(std::get<2>(key), n);
      workers = scan_graphs(graphs, jobs, items, motifs);
      scanned = graphs.size();
    }

    std::vector<Partial> totals(items.size());
    for (const auto& w : workers) {
      for (std::size_t i = 0; i < items.size(); ++i) totals[i].merge(w.partials[i]);
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    for (std::size_t i = 0; i < items.size(); ++i) {
      const Partial& p = totals[i];
      VerificationReport r;
      r.spec = items[i].spec;
      r.bound = r.spec.bound();
      r.scanned = scanned;
      r.passed = p.passed;
      r.elapsed_ms = elapsed;
      if (p.any) {
        if (r.spec.theorem != Theorem::nonexistence) r.observed_max = to_count(p.max);
        for (const auto w : p.witnesses) r.witnesses.push_back(to_graph6(graph_from_key(n, w)));
        r.witness_matches_construction = p.matched;
      }
      if (p.passed == 0) {
        r.verdict = Verdict::no_graphs;
      } else if (r.spec.theorem == Theorem::nonexistence) {
        r.verdict = Verdict::bound_violated;
      } else {
        r.verdict = *r.observed_max == *r.bound ? Verdict::exact_match : Verdict::bound_violated;
      }
      reports[members[i]] = std::move(r);
    }
  }
  return reports;
}

VerificationReport verify_bound(const VerifySpec& spec, int jobs) {
  return verify_all({spec}, jobs).front();
}

VerificationReport verify_nonexistence(int n, int s2, int delta, int jobs) {
  VerifySpec spec;
  spec.theorem = Theorem::nonexistence;
  spec.n = n;
  spec.s2 = s2;
  spec.delta = delta;
  spec.delta_mode = DeltaMode::at_least;
  return verify_bound(spec, jobs);
}

// ---------------------------------------------------------------------------

ConvexityGrid ConvexityGrid::defaults(ConvexFamily family) {
  ConvexityGrid g;
  g.family = family;
  return g;
}

void ConvexityGrid::validate() const {
  require(s2_min >= 1 && s2_min <= s2_max, "convexity grid needs 1 <= s2_min <= s2_max");
  require(s2_max <= 200, "convexity grid s2_max must be at most 200");
  require(n_offset_min >= 1 && n_offset_min <= n_offset_max,
          "convexity grid needs 1 <= n_offset_min <= n_offset_max (n >= 2s + 1)");
  require(n_offset_max <= 200, "convexity grid n_offset_max must be at most 200");
  if (family == ConvexFamily::biclique) {
    require(max_r >= 2 && max_r <= 40, "convexity grid needs 2 <= max_r <= 40");
  } else {
    require(order_min >= 1 && order_min <= order_max && order_max <= 40,
            "convexity grid needs 1 <= order_min <= order_max <= 40");
  }
}

json ConvexityGrid::to_json() const {
  json j;
  j["family"] = to_string(family);
  j["s2"] = {s2_min, s2_max};
  if (family != ConvexFamily::core) j["n_offset"] = {n_offset_min, n_offset_max};
  if (family == ConvexFamily::biclique) {
    j["max_r"] = max_r;
  } else {
    j["order"] = {order_min, order_max};
  }
  return j;
}

ConvexityGrid ConvexityGrid::from_json(const json& j) {
  check_keys(j, {"family", "s2", "n_offset", "order", "max_r"}, "convexity grid");
  try {
    ConvexityGrid g = defaults(parse_convex_family(get_string(j, "family")));
    auto range = [&](const char* key, int& lo, int& hi) {
      if (!j.contains(key)) return;
      const auto& v = j.at(key);
      require(v.is_array() && v.size() == 2 && v[0].is_number_integer() &&
                  v[1].is_number_integer(),
              std::string("field '") + key + "' must be [min, max]");
      lo = v[0].get<int>();
      hi = v[1].get<int>();
    };
    range("s2", g.s2_min, g.s2_max);
    range("n_offset", g.n_offset_min, g.n_offset_max);
    range("order", g.order_min, g.order_max);
    if (j.contains("max_r")) g.max_r = get_int(j, "max_r");
    g.validate();
    return g;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::invalid_argument, std::string("malformed convexity grid: ") + e.what());
  }
}

json ConvexityReport::to_json() const {
  json j;
  j["grid"] = grid.to_json();
  j["points"] = points;
  if (min_second_difference) {
    j["min_second_difference"] = to_decimal(*min_second_difference);
    json at;
    at["s2"] = argmin.s2;
    if (grid.family != ConvexFamily::core) at["n"] = argmin.n;
    if (grid.family == ConvexFamily::biclique) {
      at["r1"] = argmin.r1;
      at["r2"] = argmin.r2;
    } else {
      at["order"] = argmin.order;
    }
    at["t"] = argmin.t;
    j["argmin"] = at;
  } else {
    j["min_second_difference"] = nullptr;
    j["argmin"] = nullptr;
  }
  j["all_nonnegative"] = all_nonnegative;
  return j;
}

ConvexityReport verify_convexity(const ConvexityGrid& grid) {
  grid.validate();
  ConvexityReport report;
  report.grid = grid;

  auto visit = [&](ConvexityPoint p) {
    for (p.t = 2; in_convexity_domain(grid.family, p); ++p.t) {
      const SignedCount value = second_difference(grid.family, p);
      ++report.points;
      if (!report.min_second_difference || value < *report.min_second_difference) {
        report.min_second_difference = value;
        report.argmin = p;
      }
      if (value < 0) report.all_nonnegative = false;
    }
  };

  for (int s2 = grid.s2_min; s2 <= grid.s2_max; ++s2) {
    const int n_lo = grid.family == ConvexFamily::core ? s2 + 1 : s2 + grid.n_offset_min;
    const int n_hi = grid.family == ConvexFamily::core ? s2 + 1 : s2 + grid.n_offset_max;
    for (int n = n_lo; n <= n_hi; ++n) {
      if (grid.family == ConvexFamily::biclique) {
        for (int r1 = 1; 2 * r1 <= grid.max_r; ++r1) {
          for (int r2 = r1; r1 + r2 <= grid.max_r; ++r2) visit({n, s2, 0, r1, r2, 0});
        }
      } else {
        for (int l = grid.order_min; l <= grid.order_max; ++l) visit({n, s2, l, 0, 0, 0});
      }
    }
  }
  return report;
}

}  // namespace fracturan
