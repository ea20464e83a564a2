#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qualcube/result.hpp"

namespace qualcube::config {

// Defaults shared by every subcommand, loadable from a JSON file (the
// QUALCUBE_CONFIG environment variable names one) and overridden by flags.
struct CliConfig {
  std::optional<std::string> input;
  std::optional<std::string> output;
  std::optional<std::string> format;  // ttl | trig | nq | nt
  std::optional<std::string> graph_iri;
  std::optional<std::string> computed_on;
  std::vector<std::string> metrics;  // class IRIs or local names
  std::optional<std::string> extension;  // extension vocabulary path
  std::optional<std::string> endpoint;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> clock;  // ISO-8601 timestamp override
  std::map<std::string, double> weights;
  std::optional<std::string> normalization;    // none | minmax
  std::optional<std::string> missing_policy;   // zero | exclude
  std::map<std::string, double> thresholds;
  std::optional<int> base_stars;
  std::optional<int> connect_timeout_ms;
  std::optional<int> request_timeout_ms;
  std::optional<int> max_parallel_probes;
  std::optional<int> max_sample_size;
  std::optional<int> retry_count;
};

// Parses the JSON document; unknown keys are rejected with an error naming
// the key, as are values of the wrong shape.
Result<CliConfig, std::string> parse_config(const std::string& json_text);

Result<CliConfig, std::string> load_config_file(const std::string& path);

// base overridden by every field present in overlay.
CliConfig layered(CliConfig base, const CliConfig& overlay);

// Weight/threshold documents: a JSON object of metric class IRI -> number.
Result<std::map<std::string, double>, std::string> parse_weight_map(
    const std::string& json_text);

}  // namespace qualcube::config
