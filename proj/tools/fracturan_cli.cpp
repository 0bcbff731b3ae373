// fracturan command-line front end. Talks to the library only through the C API.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fracturan/fracturan.h"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kViolated = 1, kUsage = 2, kFormat = 3 };

// Carries a library status out of a subcommand.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(ft_status status) {
  switch (status) {
    case FT_OK: return kOk;
    case FT_INVALID_ARGUMENT:
    case FT_OUT_OF_RANGE:
    case FT_OVERFLOW: return kUsage;
    default: return kFormat;
  }
}

void check(ft_status status) {
  if (status != FT_OK) throw Failure{exit_for(status), ft_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) { throw Failure{kUsage, message}; }

struct GraphDeleter {
  void operator()(ft_graph* g) const { ft_graph_free(g); }
};
using GraphPtr = std::unique_ptr<ft_graph, GraphDeleter>;

std::string take(char* text) {
  std::string out(text == nullptr ? "" : text);
  ft_string_free(text);
  return out;
}

GraphPtr parse_graph6(const std::string& text, const std::string& where = {}) {
  ft_graph* g = nullptr;
  const ft_status status = ft_graph_from_graph6(text.c_str(), &g);
  if (status != FT_OK) {
    throw Failure{exit_for(status), (where.empty() ? "" : where + ": ") + ft_last_error()};
  }
  return GraphPtr(g);
}

std::string graph6_of(const ft_graph* g) {
  char* text = nullptr;
  check(ft_graph_to_graph6(g, &text));
  return take(text);
}

json graph_json(const ft_graph* g) {
  return {{"graph6", graph6_of(g)}, {"order", ft_graph_order(g)}, {"size", ft_graph_size(g)}};
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// Graphs named by --g6 values and by the lines of --in (a path or "-").
std::vector<std::pair<std::string, GraphPtr>> load_inputs(const std::vector<std::string>& inline_graphs,
                                                          const std::string& in_path) {
  std::vector<std::pair<std::string, GraphPtr>> out;
  for (const auto& text : inline_graphs) out.emplace_back(text, parse_graph6(text));
  if (!in_path.empty()) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (in_path != "-") {
      file.open(in_path, std::ios::binary);
      if (!file) throw Failure{kFormat, "cannot open '" + in_path + "'"};
      in = &file;
    }
    const std::string label = in_path == "-" ? "<stdin>" : in_path;
    std::string line;
    for (std::size_t number = 1; std::getline(*in, line); ++number) {
      const auto last = line.find_last_not_of(" \t\r\n");
      if (last == std::string::npos) continue;
      line.erase(last + 1);
      out.emplace_back(line, parse_graph6(line, label + ":" + std::to_string(number)));
    }
  }
  if (out.empty()) usage_error("no input graphs (use --g6 or --in)");
  return out;
}

std::vector<int> parse_ints(const std::string& text, std::size_t expected, const char* what) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(value);
    } catch (const std::exception&) {
      usage_error(std::string(what) + ": '" + text + "' is not a comma-separated integer list");
    }
  }
  if (values.size() != expected) {
    usage_error(std::string(what) + " needs " + std::to_string(expected) + " integers, got '" +
                text + "'");
  }
  return values;
}

std::vector<int> edge_pairs(const std::vector<std::string>& edges) {
  std::vector<int> flat;
  for (const auto& e : edges) {
    const auto uv = parse_ints(e, 2, "--edge");
    flat.insert(flat.end(), uv.begin(), uv.end());
  }
  return flat;
}

ft_delta_mode delta_mode_of(const std::string& text) {
  if (text == "exact") return FT_DELTA_EXACT;
  if (text == "at-least") return FT_DELTA_AT_LEAST;
  usage_error("--delta-mode must be exact or at-least");
}

ft_family family_of(const std::string& text) {
  if (text == "middle" || text == "F1") return FT_FAMILY_MIDDLE;
  if (text == "dominating" || text == "F2") return FT_FAMILY_DOMINATING;
  usage_error("--family must be middle (F1) or dominating (F2)");
}

const char* family_name(ft_family family) {
  return family == FT_FAMILY_MIDDLE ? "middle" : "dominating";
}

int verdict_exit(ft_verdict verdict) {
  return verdict == FT_VERDICT_BOUND_VIOLATED ? kViolated : kOk;
}

std::string corpus_for(int n, const std::string& given) {
  if (!given.empty()) return given;
  const char* dir = std::getenv("FRACTURAN_CORPUS_DIR");
  if (dir == nullptr || *dir == '\0') {
    usage_error("source graph6 needs --corpus or FRACTURAN_CORPUS_DIR");
  }
  return (std::filesystem::path(dir) / ("graph" + std::to_string(n) + ".g6")).string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kFormat, "cannot open '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// "-" writes to standard output.
void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kFormat, "cannot write '" + path + "'"};
}

// ---------------------------------------------------------------------------

struct Options {
  int n = 0, s2 = 0, t = 0, delta = 0, k = 0, d = 0;
  int order = 0, r1 = 0, r2 = 0;
  int jobs = 0;
  std::string motif;
  std::string delta_mode = "exact";
  std::string theorem;
  std::string family;
  std::string split;
  std::string source = "native";
  std::string corpus;
  std::string in;
  std::string config, report, csv;
  std::string spec;
  std::string binom;
  std::string s2_range, n_offset, order_range;
  int max_r = 0;
  std::vector<std::string> g6;
  std::vector<std::string> edges;
  std::vector<std::string> positional;
  bool describe = false, oracle = false, literal = false, certificate = false, attaining = false;
  std::string method = "fast";
};

int run_construct(const Options& o, const CLI::App& cmd) {
  if (cmd.count("--family") > 0) {
    if (cmd.count("--split") == 0) usage_error("--family needs --split a,b,c");
    const auto parts = parse_ints(o.split, 3, "--split");
    const ft_family family = family_of(o.family);
    ft_graph* g = nullptr;
    check(ft_build_family_member(family, o.n, o.s2, o.t, o.delta, {parts[0], parts[1], parts[2]},
                                 &g));
    const GraphPtr graph(g);
    std::cout << graph6_of(graph.get()) << '\n';
    json j{{"family", family_name(family)},
           {"n", o.n},
           {"s2", o.s2},
           {"t", o.t},
           {"delta", o.delta},
           {"split", {{"dominating", parts[0]}, {"middle", parts[1]}, {"independent", parts[2]}}},
           {"size", ft_graph_size(graph.get())}};
    // The cut vertex opens its part: vertex 0, or the first middle vertex at index t.
    const int v = family == FT_FAMILY_DOMINATING ? 0 : o.t;
    int degree = 0;
    for (int w = 0; w < ft_graph_order(graph.get()); ++w) degree += ft_graph_has_edge(graph.get(), v, w);
    j["vertex"] = v;
    j["vertex_degree"] = degree;
    emit(j);
    return kOk;
  }
  if (cmd.count("--split") > 0) usage_error("--split needs --family");
  char* description = nullptr;
  check(ft_describe_extremal(o.n, o.s2, o.t, o.delta, &description));
  const std::string text = take(description);
  if (!o.describe) {
    ft_graph* g = nullptr;
    check(ft_build_extremal(o.n, o.s2, o.t, o.delta, &g));
    const GraphPtr graph(g);
    std::cout << graph6_of(graph.get()) << '\n';
  }
  std::cout << text << '\n';
  return kOk;
}

int run_nu_star(const Options& o) {
  if (o.method != "fast" && o.method != "deficiency") {
    usage_error("--method must be fast or deficiency");
  }
  for (const auto& [text, g] : load_inputs(o.g6, o.in)) {
    json j;
    if (o.method == "fast") {
      std::int64_t doubled = 0;
      check(ft_nu_star_fast(g.get(), &doubled));
      j["doubled"] = doubled;
    } else {
      std::int64_t doubled = 0;
      std::uint64_t removed = 0;
      int isolated = 0;
      check(ft_nu_star_deficiency(g.get(), &doubled, &removed, &isolated));
      json set = json::array();
      for (int v = 0; v < 64; ++v) {
        if ((removed >> v) & 1U) set.push_back(v);
      }
      j["doubled"] = doubled;
      j["witness"] = {{"removed", set},
                      {"isolated", isolated},
                      {"deficiency", isolated - static_cast<int>(set.size())}};
    }
    if (o.certificate) {
      char* cert = nullptr;
      check(ft_fractional_certificate(g.get(), &cert));
      j["certificate"] = json::parse(take(cert));
    }
    emit(j);
  }
  return kOk;
}

int run_matching(const Options& o) {
  for (const auto& [text, g] : load_inputs(o.g6, o.in)) {
    int value = 0;
    check(ft_matching_number(g.get(), &value));
    emit({{"matching_number", value}});
  }
  return kOk;
}

int run_count(const Options& o) {
  for (const auto& [text, g] : load_inputs(o.g6, o.in)) {
    char* value = nullptr;
    check(o.oracle ? ft_count_oracle(g.get(), o.motif.c_str(), &value)
                   : ft_count(g.get(), o.motif.c_str(), &value));
    emit({{"motif", o.motif}, {"count", take(value)}});
  }
  return kOk;
}

int run_formula(const Options& o, const CLI::App& cmd) {
  if (cmd.count("--binom") > 0) {
    const auto ab = parse_ints(o.binom, 2, "--binom");
    char* value = nullptr;
    check(ft_binom(ab[0], ab[1], &value));
    emit({{"a", ab[0]}, {"b", ab[1]}, {"binom", take(value)}});
    return kOk;
  }
  for (const char* flag : {"--n", "--s2", "--t", "--delta", "--motif"}) {
    if (cmd.count(flag) == 0) usage_error(std::string("formula needs ") + flag + " (or --binom)");
  }
  char* value = nullptr;
  check(ft_motif_formula(o.n, o.s2, o.t, o.delta, o.motif.c_str(), &value));
  emit({{"n", o.n},
        {"s2", o.s2},
        {"t", o.t},
        {"delta", o.delta},
        {"motif", o.motif},
        {"value", take(value)}});
  return kOk;
}

int run_bound(const Options& o, const CLI::App& cmd) {
  auto need = [&](std::initializer_list<const char*> flags) {
    for (const char* flag : flags) {
      if (cmd.count(flag) == 0) usage_error("theorem " + o.theorem + " needs " + flag);
    }
  };
  json j{{"theorem", o.theorem}, {"n", o.n}};
  char* value = nullptr;
  if (o.theorem == "1.1") {
    need({"--n", "--k"});
    j["k"] = o.k;
    check(ft_bound_matching_number(o.n, o.k, &value));
  } else if (o.theorem == "1.2") {
    need({"--n", "--s2", "--d"});
    j["s2"] = o.s2;
    j["d"] = o.d;
    check(ft_bound_max_degree(o.n, o.s2, o.d, &value));
  } else if (o.theorem == "1.4") {
    need({"--n", "--s2"});
    j["s2"] = o.s2;
    check(ft_bound_min_degree_one(o.n, o.s2, &value));
  } else if (o.theorem == "1.6" || o.theorem == "1.9") {
    need({"--n", "--s2", "--delta", "--motif"});
    const bool clique = o.motif.rfind("clique:", 0) == 0;
    if (clique != (o.theorem == "1.6")) {
      usage_error(o.theorem == "1.6" ? "theorem 1.6 needs a clique motif"
                                     : "theorem 1.9 needs a biclique motif");
    }
    const ft_delta_mode mode = delta_mode_of(o.delta_mode);
    j["s2"] = o.s2;
    j["delta"] = o.delta;
    j["motif"] = o.motif;
    j["delta_mode"] = o.delta_mode;
    check(ft_motif_bound(o.n, o.s2, o.delta, o.motif.c_str(), mode, &value));
    if (o.attaining) {
      char* tuples = nullptr;
      check(ft_bound_attaining(o.n, o.s2, o.delta, o.motif.c_str(), mode, &tuples));
      j["bound"] = take(value);
      j["attained_by"] = json::parse(take(tuples));
      emit(j);
      return kOk;
    }
  } else {
    usage_error("--theorem must be one of 1.1, 1.2, 1.4, 1.6, 1.9");
  }
  j["bound"] = take(value);
  emit(j);
  return kOk;
}

int run_family_max(const Options& o) {
  const ft_family family = family_of(o.family);
  char* value = nullptr;
  check(ft_family_max_count(family, o.n, o.s2, o.t, o.delta, o.motif.c_str(), o.literal ? 1 : 0,
                            &value));
  emit({{"family", family_name(family)},
        {"n", o.n},
        {"s2", o.s2},
        {"t", o.t},
        {"delta", o.delta},
        {"motif", o.motif},
        {"method", o.literal ? "literal" : "splits"},
        {"max", take(value)}});
  return kOk;
}

int run_convexity(const Options& o, const CLI::App& cmd) {
  ft_convex_family family = FT_CONVEX_CORE;
  if (o.family == "core") {
    family = FT_CONVEX_CORE;
  } else if (o.family == "pendant") {
    family = FT_CONVEX_PENDANT;
  } else if (o.family == "biclique") {
    family = FT_CONVEX_BICLIQUE;
  } else {
    usage_error("--family must be core, pendant or biclique");
  }

  if (cmd.count("--t") > 0) {
    const ft_convexity_point p{o.n, o.s2, o.order, o.r1, o.r2, o.t};
    char* value = nullptr;
    check(ft_second_difference(family, &p, &value));
    json j{{"family", o.family}};
    if (family != FT_CONVEX_CORE) j["n"] = o.n;
    j["s2"] = o.s2;
    if (family == FT_CONVEX_BICLIQUE) {
      j["r1"] = o.r1;
      j["r2"] = o.r2;
    } else {
      j["order"] = o.order;
    }
    j["t"] = o.t;
    j["second_difference"] = take(value);
    emit(j);
    return kOk;
  }

  json grid{{"family", o.family}};
  auto range = [&](const char* flag, const std::string& text, const char* key) {
    if (cmd.count(flag) == 0) return;
    const auto v = parse_ints(text, 2, flag);
    grid[key] = {v[0], v[1]};
  };
  range("--s2-range", o.s2_range, "s2");
  range("--n-offset", o.n_offset, "n_offset");
  range("--order-range", o.order_range, "order");
  if (cmd.count("--max-r") > 0) grid["max_r"] = o.max_r;
  char* report = nullptr;
  int ok = 0;
  check(ft_verify_convexity(grid.dump().c_str(), &report, &ok));
  std::cout << take(report) << '\n';
  return ok != 0 ? kOk : kViolated;
}

int run_verify(const Options& o, const CLI::App& cmd) {
  json spec;
  if (cmd.count("--spec") > 0) {
    try {
      spec = json::parse(o.spec);
    } catch (const json::parse_error& e) {
      usage_error(std::string("--spec is not valid JSON: ") + e.what());
    }
  } else {
    if (cmd.count("--theorem") == 0 || cmd.count("--n") == 0) {
      usage_error("verify needs --theorem and --n (or --spec)");
    }
    spec["theorem"] = o.theorem;
    spec["n"] = o.n;
    if (cmd.count("--s2") > 0) spec["s2"] = o.s2;
    if (cmd.count("--delta") > 0) spec["delta"] = o.delta;
    if (cmd.count("--k") > 0) spec["k"] = o.k;
    if (cmd.count("--d") > 0) spec["d"] = o.d;
    if (cmd.count("--motif") > 0) spec["motif"] = o.motif;
    if (cmd.count("--delta-mode") > 0) spec["delta_mode"] = o.delta_mode;
    spec["source"] = o.source;
    if (o.source == "graph6") spec["corpus"] = corpus_for(o.n, o.corpus);
  }
  char* report = nullptr;
  ft_verdict verdict = FT_VERDICT_NO_GRAPHS;
  check(ft_verify(spec.dump().c_str(), o.jobs, &report, &verdict));
  std::cout << take(report) << '\n';
  return verdict_exit(verdict);
}

int run_batch(const Options& o) {
  const std::string config = read_file(o.config);
  const std::string base = std::filesystem::absolute(o.config).parent_path().string();
  char* report = nullptr;
  char* csv = nullptr;
  int violated = 0;
  check(ft_run_batch(config.c_str(), base.c_str(), o.jobs, &report, &csv, &violated));
  const std::string report_text = take(report) + "\n";
  const std::string csv_text = take(csv);
  write_file(o.report.empty() ? "-" : o.report, report_text);
  if (!o.csv.empty()) write_file(o.csv, csv_text);
  return violated != 0 ? kViolated : kOk;
}

int run_graph(const Options& o, const std::string& op, const CLI::App& cmd) {
  auto operand = [&](std::size_t i) {
    if (o.positional.size() <= i) usage_error("graph " + op + " needs more graph6 operands");
    return parse_graph6(o.positional[i]);
  };
  auto operands = [&](std::size_t count) {
    if (o.positional.size() != count) {
      usage_error("graph " + op + " takes " + std::to_string(count) + " graph6 operand(s)");
    }
  };
  ft_graph* out = nullptr;
  // Reads `out` only after the call that fills it has returned.
  auto result = [&](ft_status status) {
    check(status);
    const GraphPtr graph(out);
    emit(graph_json(graph.get()));
    return kOk;
  };

  if (op == "complement") {
    operands(1);
    return result(ft_graph_complement(operand(0).get(), &out));
  }
  if (op == "join" || op == "union") {
    operands(2);
    const auto g = operand(0);
    const auto h = operand(1);
    return result(op == "join" ? ft_graph_join(g.get(), h.get(), &out)
                               : ft_graph_disjoint_union(g.get(), h.get(), &out));
  }
  if (op == "delete") {
    operands(1);
    const auto flat = edge_pairs(o.edges);
    return result(ft_graph_delete_edges(operand(0).get(), flat.data(), flat.size() / 2, &out));
  }
  if (op == "encode") {
    operands(0);
    if (cmd.count("--n") == 0) usage_error("graph encode needs --n");
    const auto flat = edge_pairs(o.edges);
    return result(ft_graph_from_edges(o.n, flat.data(), flat.size() / 2, &out));
  }
  if (op == "decode") {
    operands(1);
    const auto g = operand(0);
    char* edges = nullptr;
    check(ft_graph_edges_json(g.get(), &edges));
    json j = graph_json(g.get());
    j["edges"] = json::parse(take(edges));
    emit(j);
    return kOk;
  }
  if (op == "degrees") {
    operands(1);
    const auto g = operand(0);
    std::vector<int> degrees(static_cast<std::size_t>(ft_graph_order(g.get())));
    int lo = 0, hi = 0;
    check(ft_graph_degree_stats(g.get(), &lo, &hi, degrees.data()));
    emit({{"min_degree", lo}, {"max_degree", hi}, {"degrees", degrees}});
    return kOk;
  }
  if (op == "isomorphic") {
    operands(2);
    int same = 0;
    check(ft_graph_isomorphic(operand(0).get(), operand(1).get(), &same));
    emit({{"isomorphic", same != 0}});
    return kOk;
  }
  if (op == "enumerate") {
    operands(0);
    if (cmd.count("--n") == 0) usage_error("graph enumerate needs --n");
    std::uint64_t count = 0;
    const std::string corpus = o.source == "graph6" ? corpus_for(o.n, o.corpus) : std::string();
    if (o.source != "native" && o.source != "graph6") usage_error("--source must be native or graph6");
    check(ft_enumerate_count(o.n, o.source == "graph6" ? corpus.c_str() : nullptr, &count));
    emit({{"n", o.n}, {"source", o.source}, {"count", count}});
    return kOk;
  }
  usage_error("unknown graph operation '" + op + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions, counts and exhaustive bound checks for graphs with a given "
               "fractional matching number."};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* cmd, bool with_t) {
    cmd->add_option("--n", o.n, "number of vertices");
    cmd->add_option("--s2", o.s2, "twice the fractional matching number (2s)");
    if (with_t) cmd->add_option("--t", o.t, "order of the dominating clique");
    cmd->add_option("--delta", o.delta, "minimum degree");
  };
  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--g6", o.g6, "graph6 string (repeatable)");
    cmd->add_option("--in", o.in, "file of graph6 lines, '-' for standard input");
  };

  auto* construct = app.add_subcommand("construct", "build the extremal graph or a family member");
  add_params(construct, true);
  construct->add_flag("--describe", o.describe, "print only the JSON description");
  construct->add_option("--family", o.family, "middle (F1) or dominating (F2)");
  construct->add_option("--split", o.split, "kept neighbors per part: dominating,middle,independent");

  auto* nu_star = app.add_subcommand("nu-star", "fractional matching number (doubled)");
  add_inputs(nu_star);
  nu_star->add_option("--method", o.method, "fast (double cover) or deficiency (subset scan)");
  nu_star->add_flag("--certificate", o.certificate, "include an optimal half-integral matching");

  auto* matching = app.add_subcommand("matching", "matching number");
  add_inputs(matching);

  auto* count = app.add_subcommand("count", "count motif copies");
  add_inputs(count);
  count->add_option("--motif", o.motif, "clique:<l> or biclique:<r1>,<r2>")->required();
  count->add_flag("--oracle", o.oracle, "use the naive enumeration oracle");

  auto* formula = app.add_subcommand("formula", "closed-form count of the extremal graph, or binom");
  add_params(formula, true);
  formula->add_option("--motif", o.motif, "clique:<l> or biclique:<r1>,<r2>");
  formula->add_option("--binom", o.binom, "a,b: the binomial coefficient C(a, b)");

  auto* bound = app.add_subcommand("bound", "evaluate a theorem bound");
  bound->add_option("--theorem", o.theorem, "1.1, 1.2, 1.4, 1.6 or 1.9")->required();
  add_params(bound, false);
  bound->add_option("--k", o.k, "matching number (1.1)");
  bound->add_option("--d", o.d, "maximum degree (1.2)");
  bound->add_option("--motif", o.motif, "clique:<l> or biclique:<r1>,<r2>");
  bound->add_option("--delta-mode", o.delta_mode, "exact or at-least");
  bound->add_flag("--attaining", o.attaining, "list the parameter tuples attaining the bound");

  auto* family_max = app.add_subcommand("family-max", "maximum motif count over a family");
  family_max->add_option("--family", o.family, "middle (F1) or dominating (F2)")->required();
  add_params(family_max, true);
  family_max->add_option("--motif", o.motif, "clique:<l> or biclique:<r1>,<r2>")->required();
  family_max->add_flag("--literal", o.literal, "enumerate every kept-neighbor set");
  for (const char* flag : {"--n", "--s2", "--t", "--delta"}) family_max->get_option(flag)->required();

  auto* convexity = app.add_subcommand("convexity", "second differences in t");
  convexity->add_option("--family", o.family, "core, pendant or biclique")->required();
  convexity->add_option("--n", o.n, "number of vertices (pendant, biclique)");
  convexity->add_option("--s2", o.s2, "2s");
  convexity->add_option("--order", o.order, "clique order l (core, pendant)");
  convexity->add_option("--r1", o.r1, "biclique side");
  convexity->add_option("--r2", o.r2, "biclique side");
  convexity->add_option("--t", o.t, "single point; omit to sweep a grid");
  convexity->add_option("--s2-range", o.s2_range, "sweep: min,max of 2s");
  convexity->add_option("--n-offset", o.n_offset, "sweep: n - 2s ranges over min,max");
  convexity->add_option("--order-range", o.order_range, "sweep: min,max of l");
  convexity->add_option("--max-r", o.max_r, "sweep: largest r1 + r2");

  auto* verify = app.add_subcommand("verify", "exhaustive scan against a bound");
  verify->add_option("--theorem", o.theorem, "1.1, 1.2, 1.4, 1.6, 1.9 or nonexistence");
  add_params(verify, false);
  verify->add_option("--k", o.k, "matching number (1.1)");
  verify->add_option("--d", o.d, "maximum degree (1.2)");
  verify->add_option("--motif", o.motif, "clique:<l> or biclique:<r1>,<r2>");
  verify->add_option("--delta-mode", o.delta_mode, "exact or at-least");
  verify->add_option("--source", o.source, "native or graph6");
  verify->add_option("--corpus", o.corpus, "graph6 corpus (default $FRACTURAN_CORPUS_DIR/graph<n>.g6)");
  verify->add_option("--spec", o.spec, "the whole spec as JSON");
  verify->add_option("--jobs", o.jobs, "worker threads (default: available parallelism)");

  auto* batch = app.add_subcommand("batch", "run a JSON array of verify specs");
  batch->add_option("--config", o.config, "config file")->required();
  batch->add_option("--report", o.report, "write the JSON report here; '-' or omitted for standard output");
  batch->add_option("--csv", o.csv, "write the CSV summary here; '-' for standard output");
  batch->add_option("--jobs", o.jobs, "worker threads (default: available parallelism)");

  auto* graph = app.add_subcommand("graph", "graph operations on graph6 operands");
  std::string op;
  graph->add_option("op", op,
                    "complement, join, union, delete, degrees, isomorphic, decode, encode, enumerate")
      ->required();
  graph->add_option("graphs", o.positional, "graph6 operands");
  graph->add_option("--edge", o.edges, "u,v (repeatable; delete and encode)");
  graph->add_option("--n", o.n, "order (encode, enumerate)");
  graph->add_option("--source", o.source, "native or graph6 (enumerate)");
  graph->add_option("--corpus", o.corpus, "graph6 corpus (enumerate)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "fracturan: error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (construct->parsed()) {
      for (const char* flag : {"--n", "--s2", "--t", "--delta"}) {
        if (construct->count(flag) == 0) usage_error(std::string("construct needs ") + flag);
      }
      return run_construct(o, *construct);
    }
    if (nu_star->parsed()) return run_nu_star(o);
    if (matching->parsed()) return run_matching(o);
    if (count->parsed()) return run_count(o);
    if (formula->parsed()) return run_formula(o, *formula);
    if (bound->parsed()) return run_bound(o, *bound);
    if (family_max->parsed()) return run_family_max(o);
    if (convexity->parsed()) return run_convexity(o, *convexity);
    if (verify->parsed()) return run_verify(o, *verify);
    if (batch->parsed()) return run_batch(o);
    if (graph->parsed()) return run_graph(o, op, *graph);
  } catch (const Failure& f) {
    std::cerr << "fracturan: error: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "fracturan: error: " << e.what() << '\n';
    return kFormat;
  }
  return kUsage;
}
