#include "fracturan/batch.hpp"

#include <filesystem>
#include <sstream>

#include "fracturan/error.hpp"

namespace fracturan {

using json = nlohmann::ordered_json;

std::vector<VerifySpec> parse_batch_config(const std::string& config_text,
                                           const std::string& base_dir) {
  json config;
  try {
    config = json::parse(config_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::invalid_argument, std::string("batch config is not valid JSON: ") + e.what());
  }
  require(config.is_array(), "batch config must be a JSON array of verify specs");

  std::vector<VerifySpec> specs;
  for (std::size_t i = 0; i < config.size(); ++i) {
    try {
      VerifySpec spec = VerifySpec::from_json(config[i]);
      if (!spec.corpus.empty()) {
        const std::filesystem::path corpus(spec.corpus);
        if (corpus.is_relative() && !base_dir.empty()) {
          spec.corpus = (std::filesystem::path(base_dir) / corpus).lexically_normal().string();
        }
      }
      spec.validate();
      specs.push_back(std::move(spec));
    } catch (const Error& e) {
      fail(ErrorCode::invalid_argument, "spec " + std::to_string(i) + ": " + e.what());
    }
  }
  return specs;
}

BatchResult run_batch(const std::vector<VerifySpec>& specs, int jobs) {
  BatchResult result;
  result.reports = verify_all(specs, jobs);
  for (const auto& r : result.reports) {
    if (r.verdict == Verdict::bound_violated) result.any_violation = true;
  }
  return result;
}

json BatchResult::to_json() const {
  json j;
  j["reports"] = json::array();
  std::size_t exact = 0, violated = 0, empty = 0;
  for (const auto& r : reports) {
    j["reports"].push_back(r.to_json());
    switch (r.verdict) {
      case Verdict::exact_match: ++exact; break;
      case Verdict::bound_violated: ++violated; break;
      case Verdict::no_graphs: ++empty; break;
    }
  }
  j["summary"] = {{"total", reports.size()},
                  {"exact_match", exact},
                  {"bound_violated", violated},
                  {"no_graphs", empty}};
  j["any_violation"] = any_violation;
  return j;
}

std::string BatchResult::to_csv() const {
  std::ostringstream out;
  out << "theorem,n,s2,delta,k,d,motif,delta_mode,source,bound,observed,verdict\n";
  for (const auto& r : reports) {
    const auto& s = r.spec;
    const bool edges = s.theorem == Theorem::matching_number || s.theorem == Theorem::max_degree ||
                       s.theorem == Theorem::min_degree_one;
    const bool has_delta = s.theorem == Theorem::cliques || s.theorem == Theorem::bicliques ||
                           s.theorem == Theorem::nonexistence;
    out << theorem_id(s.theorem) << ',' << s.n << ',';
    if (s.theorem != Theorem::matching_number) out << s.s2;
    out << ',';
    if (has_delta) out << s.delta;
    out << ',';
    if (s.theorem == Theorem::matching_number) out << s.k;
    out << ',';
    if (s.theorem == Theorem::max_degree) out << s.d;
    out << ',';
    if (s.theorem != Theorem::nonexistence) {
      const std::string motif = edges ? "clique:2" : s.motif.to_string();
      out << (motif.find(',') == std::string::npos ? motif : '"' + motif + '"');
    }
    out << ',';
    if (has_delta) out << to_string(s.delta_mode);
    out << ',' << to_string(s.source) << ',';
    if (r.bound) out << to_decimal(*r.bound);
    out << ',';
    if (r.observed_max) out << to_decimal(*r.observed_max);
    out << ',' << to_string(r.verdict) << '\n';
  }
  return out.str();
}

}  // namespace fracturan
