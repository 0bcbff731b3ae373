#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fracturan/verifier.hpp"

namespace fracturan {

struct BatchResult {
  std::vector<VerificationReport> reports;
  bool any_violation = false;

  /// {"reports":[...], "summary":{...}, "any_violation":bool}
  nlohmann::ordered_json to_json() const;
  /// One row per spec: theorem,n,s2,delta,k,d,motif,delta_mode,source,bound,observed,verdict.
  std::string to_csv() const;
};

/// Parses a JSON array of verify specs. Relative corpus paths are resolved
/// against base_dir. Every spec is validated before anything runs; the first
/// invalid one raises ErrorCode::invalid_argument naming its index.
std::vector<VerifySpec> parse_batch_config(const std::string& config_text,
                                           const std::string& base_dir);

BatchResult run_batch(const std::vector<VerifySpec>& specs, int jobs = 0);

}  // namespace fracturan
