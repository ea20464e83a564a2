#include "qualcube/config.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace qualcube::config {

namespace {

using nlohmann::json;

std::optional<std::string> read_string(const json& v, const std::string& key,
                                       std::optional<std::string>& out) {
  if (!v.is_string()) {
    return "config key \"" + key + "\" must be a string";
  }
  out = v.get<std::string>();
  return std::nullopt;
}

std::optional<std::string> read_number_map(const json& v,
                                           const std::string& key,
                                           std::map<std::string, double>& out) {
  if (!v.is_object()) {
    return "config key \"" + key +
           "\" must be an object of metric IRI to number";
  }
  for (const auto& [name, entry] : v.items()) {
    if (!entry.is_number()) {
      return "config key \"" + key + "\" entry \"" + name +
             "\" must be a number";
    }
    out[name] = entry.get<double>();
  }
  return std::nullopt;
}

std::optional<std::string> read_int(const json& v, const std::string& key,
                                    std::optional<int>& out) {
  if (!v.is_number_integer()) {
    return "config key \"" + key + "\" must be an integer";
  }
  out = v.get<int>();
  return std::nullopt;
}

}  // namespace

Result<CliConfig, std::string> parse_config(const std::string& json_text) {
  using R = Result<CliConfig, std::string>;
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) {
    return R(std::string("config is not valid JSON"));
  }
  if (!doc.is_object()) {
    return R(std::string("config must be a JSON object"));
  }
  CliConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    std::optional<std::string> err;
    if (key == "input") {
      err = read_string(value, key, cfg.input);
    } else if (key == "output") {
      err = read_string(value, key, cfg.output);
    } else if (key == "format") {
      err = read_string(value, key, cfg.format);
    } else if (key == "graph-iri") {
      err = read_string(value, key, cfg.graph_iri);
    } else if (key == "computed-on") {
      err = read_string(value, key, cfg.computed_on);
    } else if (key == "extension") {
      err = read_string(value, key, cfg.extension);
    } else if (key == "endpoint") {
      err = read_string(value, key, cfg.endpoint);
    } else if (key == "clock") {
      err = read_string(value, key, cfg.clock);
    } else if (key == "normalization") {
      err = read_string(value, key, cfg.normalization);
    } else if (key == "missing-policy") {
      err = read_string(value, key, cfg.missing_policy);
    } else if (key == "metrics") {
      if (!value.is_array()) {
        err = "config key \"metrics\" must be an array of strings";
      } else {
        for (const auto& entry : value) {
          if (!entry.is_string()) {
            err = "config key \"metrics\" must be an array of strings";
            break;
          }
          cfg.metrics.push_back(entry.get<std::string>());
        }
      }
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) {
        err = "config key \"seed\" must be a non-negative integer";
      } else {
        cfg.seed = value.get<std::uint64_t>();
      }
    } else if (key == "weights") {
      err = read_number_map(value, key, cfg.weights);
    } else if (key == "thresholds") {
      err = read_number_map(value, key, cfg.thresholds);
    } else if (key == "base-stars") {
      err = read_int(value, key, cfg.base_stars);
    } else if (key == "connect-timeout-ms") {
      err = read_int(value, key, cfg.connect_timeout_ms);
    } else if (key == "request-timeout-ms") {
      err = read_int(value, key, cfg.request_timeout_ms);
    } else if (key == "max-parallel-probes") {
      err = read_int(value, key, cfg.max_parallel_probes);
    } else if (key == "max-sample-size") {
      err = read_int(value, key, cfg.max_sample_size);
    } else if (key == "retry-count") {
      err = read_int(value, key, cfg.retry_count);
    } else {
      err = "unknown config key \"" + key + "\"";
    }
    if (err) {
      return R(std::move(*err));
    }
  }
  return R(std::move(cfg));
}

Result<CliConfig, std::string> load_config_file(const std::string& path) {
  using R = Result<CliConfig, std::string>;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return R("cannot open config file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  auto parsed = parse_config(buffer.str());
  if (!parsed.ok()) {
    return R(path + ": " + parsed.error());
  }
  return parsed;
}

CliConfig layered(CliConfig base, const CliConfig& overlay) {
  if (overlay.input) base.input = overlay.input;
  if (overlay.output) base.output = overlay.output;
  if (overlay.format) base.format = overlay.format;
  if (overlay.graph_iri) base.graph_iri = overlay.graph_iri;
  if (overlay.computed_on) base.computed_on = overlay.computed_on;
  if (!overlay.metrics.empty()) base.metrics = overlay.metrics;
  if (overlay.extension) base.extension = overlay.extension;
  if (overlay.endpoint) base.endpoint = overlay.endpoint;
  if (overlay.seed) base.seed = overlay.seed;
  if (overlay.clock) base.clock = overlay.clock;
  if (!overlay.weights.empty()) base.weights = overlay.weights;
  if (overlay.normalization) base.normalization = overlay.normalization;
  if (overlay.missing_policy) base.missing_policy = overlay.missing_policy;
  if (!overlay.thresholds.empty()) base.thresholds = overlay.thresholds;
  if (overlay.base_stars) base.base_stars = overlay.base_stars;
  if (overlay.connect_timeout_ms)
    base.connect_timeout_ms = overlay.connect_timeout_ms;
  if (overlay.request_timeout_ms)
    base.request_timeout_ms = overlay.request_timeout_ms;
  if (overlay.max_parallel_probes)
    base.max_parallel_probes = overlay.max_parallel_probes;
  if (overlay.max_sample_size) base.max_sample_size = overlay.max_sample_size;
  if (overlay.retry_count) base.retry_count = overlay.retry_count;
  return base;
}

Result<std::map<std::string, double>, std::string> parse_weight_map(
    const std::string& json_text) {
  using R = Result<std::map<std::string, double>, std::string>;
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) {
    return R(std::string("weight map is not valid JSON"));
  }
  if (!doc.is_object()) {
    return R(std::string("weight map must be a JSON object"));
  }
  std::map<std::string, double> out;
  for (const auto& [name, entry] : doc.items()) {
    if (!entry.is_number()) {
      return R("weight for \"" + name + "\" must be a number");
    }
    out[name] = entry.get<double>();
  }
  return R(std::move(out));
}

}  // namespace qualcube::config
