#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qualcube/analytics.hpp"
#include "qualcube/charts.hpp"
#include "qualcube/config.hpp"
#include "qualcube/iri.hpp"
#include "qualcube/metrics.hpp"
#include "qualcube/parse.hpp"
#include "qualcube/quality_graph.hpp"
#include "qualcube/serialize.hpp"
#include "qualcube/tbox.hpp"
#include "qualcube/util.hpp"
#include "qualcube/vocab.hpp"

namespace {

using namespace qualcube;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) {
  throw CliError{code, std::move(message)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kExitIo, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text,
                  const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) fail(kExitIo, "cannot open output file: " + *path);
  out << text;
  out.flush();
  if (!out) fail(kExitIo, "cannot write output file: " + *path);
}

rdf::Format named_format(const std::string& name) {
  if (name == "ttl") return rdf::Format::Turtle;
  if (name == "trig") return rdf::Format::TriG;
  if (name == "nq") return rdf::Format::NQuads;
  if (name == "nt") return rdf::Format::NTriples;
  fail(kExitUsage,
       "unknown format: " + name + " (expected ttl, trig, nq or nt)");
}

rdf::Format format_or(const std::optional<std::string>& name,
                      const std::optional<std::string>& path,
                      rdf::Format fallback) {
  if (name) return named_format(*name);
  if (path) {
    if (auto by_suffix = rdf::format_from_path(*path)) return *by_suffix;
  }
  return fallback;
}

rdf::QuadDataset load_dataset(const std::string& path,
                              const std::optional<std::string>& format_name,
                              rdf::Format fallback = rdf::Format::TriG) {
  std::string text = read_file(path);
  rdf::Format format = format_or(format_name, path, fallback);
  auto parsed = rdf::parse_document(text, format);
  if (!parsed.ok()) {
    const rdf::ParseError& e = parsed.error();
    fail(kExitIo, path + ":" + std::to_string(e.line) + ":" +
                      std::to_string(e.column) + ": " + e.message);
  }
  return std::move(parsed.value());
}

// Shipped vocabulary, optionally extended from a user file.
struct Vocabulary {
  std::vector<daq::MetricDescriptor> descriptors;
  daq::TBox tbox;
};

Vocabulary load_vocabulary(const std::optional<std::string>& extension_path) {
  const daq::LoadedExtension& shipped = metrics::shipped_metrics();
  Vocabulary vocabulary{shipped.descriptors, shipped.merged};
  if (!extension_path) return vocabulary;
  rdf::QuadDataset ext =
      load_dataset(*extension_path, std::nullopt, rdf::Format::Turtle);
  auto loaded = daq::load_extension(ext, shipped.merged);
  if (!loaded.ok()) {
    std::string message = "extension " + *extension_path + " has defects:";
    for (const std::string& defect : loaded.error().defects) {
      message += "\n  " + defect;
    }
    fail(kExitUsage, message);
  }
  vocabulary.tbox = loaded.value().merged;
  for (daq::MetricDescriptor& d : loaded.value().descriptors) {
    vocabulary.descriptors.push_back(std::move(d));
  }
  std::sort(vocabulary.descriptors.begin(), vocabulary.descriptors.end(),
            [](const daq::MetricDescriptor& a, const daq::MetricDescriptor& b) {
              return a.metric_class < b.metric_class;
            });
  return vocabulary;
}

const daq::MetricDescriptor& resolve_metric(const std::string& name,
                                            const Vocabulary& vocabulary) {
  if (const auto* exact =
          metrics::find_descriptor(vocabulary.descriptors, name)) {
    return *exact;
  }
  const daq::MetricDescriptor* hit = nullptr;
  for (const daq::MetricDescriptor& d : vocabulary.descriptors) {
    if (iri::local_name(d.metric_class) == name) {
      if (hit) fail(kExitUsage, "metric name is ambiguous: " + name);
      hit = &d;
    }
  }
  if (!hit) fail(kExitUsage, "unknown metric: " + name);
  return *hit;
}

// Metric arguments accept class IRIs or descriptor local names; raw IRIs
// pass through so hierarchy-level classes stay addressable.
std::string metric_class_of(const std::string& name,
                            const Vocabulary& vocabulary) {
  if (iri::is_absolute(name) &&
      !metrics::find_descriptor(vocabulary.descriptors, name)) {
    return name;
  }
  return resolve_metric(name, vocabulary).metric_class;
}

// Flag values plus their CLI11 handles, so only flags the user actually
// passed override the config file.
struct Common {
  std::string config_path;
  std::string input;
  std::string output;
  std::string format;
  std::string extension;
  CLI::Option* config_opt = nullptr;
  CLI::Option* input_opt = nullptr;
  CLI::Option* output_opt = nullptr;
  CLI::Option* format_opt = nullptr;
  CLI::Option* extension_opt = nullptr;

  void wire(CLI::App* cmd) {
    config_opt = cmd->add_option(
        "--config", config_path,
        "configuration file (default: $QUALCUBE_CONFIG)");
    input_opt = cmd->add_option("--input", input, "input RDF file");
    output_opt =
        cmd->add_option("--output", output, "output file (default: stdout)");
    format_opt = cmd->add_option("--format", format, "RDF serialization")
                     ->check(CLI::IsMember({"ttl", "trig", "nq", "nt"}));
    extension_opt = cmd->add_option("--extension", extension,
                                    "extension vocabulary file");
  }

  config::CliConfig effective() const {
    config::CliConfig base;
    std::optional<std::string> path;
    if (config_opt->count()) {
      path = config_path;
    } else if (const char* env = std::getenv("QUALCUBE_CONFIG")) {
      path = std::string(env);
    }
    if (path) {
      auto parsed = config::parse_config(read_file(*path));
      if (!parsed.ok()) fail(kExitUsage, *path + ": " + parsed.error());
      base = std::move(parsed.value());
    }
    config::CliConfig overlay;
    if (input_opt->count()) overlay.input = input;
    if (output_opt->count()) overlay.output = output;
    if (format_opt->count()) overlay.format = format;
    if (extension_opt->count()) overlay.extension = extension;
    return config::layered(std::move(base), overlay);
  }
};

std::string require_input(const config::CliConfig& cfg,
                          const std::string& subcommand) {
  if (!cfg.input) fail(kExitUsage, subcommand + " needs --input");
  return *cfg.input;
}

std::string single_named_graph(const rdf::QuadDataset& data) {
  std::vector<std::string> named;
  for (const rdf::Term& g : data.graph_names()) {
    if (g.is_iri()) named.push_back(g.value());
  }
  if (named.size() == 1) return named.front();
  if (named.empty()) {
    fail(kExitUsage, "input has no named graphs; pass --graph-iri");
  }
  fail(kExitUsage, "input has several named graphs; pass --graph-iri");
}

std::string checked_clock(const std::string& clock) {
  if (!util::parse_iso8601(clock)) {
    fail(kExitUsage, "clock is not an ISO-8601 instant: " + clock);
  }
  return clock;
}

std::string now_iso8601() {
  return util::format_iso8601(std::chrono::time_point_cast<std::chrono::seconds>(
      std::chrono::system_clock::now()));
}

std::map<std::string, double> weight_file_or_config(
    const CLI::Option* file_opt, const std::string& file_path,
    const std::map<std::string, double>& from_config,
    const Vocabulary& vocabulary) {
  std::map<std::string, double> raw = from_config;
  if (file_opt->count()) {
    auto parsed = config::parse_weight_map(read_file(file_path));
    if (!parsed.ok()) fail(kExitUsage, file_path + ": " + parsed.error());
    raw = std::move(parsed.value());
  }
  std::map<std::string, double> resolved;
  for (const auto& [name, value] : raw) {
    resolved[metric_class_of(name, vocabulary)] = value;
  }
  return resolved;
}

probe::ProbeSettings probe_settings(const config::CliConfig& cfg) {
  probe::ProbeSettings settings;
  if (cfg.connect_timeout_ms) {
    settings.connect_timeout = std::chrono::milliseconds(*cfg.connect_timeout_ms);
  }
  if (cfg.request_timeout_ms) {
    settings.request_timeout = std::chrono::milliseconds(*cfg.request_timeout_ms);
  }
  if (cfg.max_parallel_probes) {
    settings.max_parallel_probes = *cfg.max_parallel_probes;
  }
  if (cfg.max_sample_size) settings.max_sample_size = *cfg.max_sample_size;
  if (cfg.retry_count) settings.retry_count = *cfg.retry_count;
  settings.endpoint_url = cfg.endpoint;
  if (cfg.seed) settings.sample_seed = *cfg.seed;
  return settings;
}

// ---- assess ----

struct AssessOpts {
  Common common;
  std::string computed_on;
  std::string graph_iri;
  std::string clock;
  std::string endpoint;
  std::string append_path;
  std::vector<std::string> metrics;
  std::uint64_t seed = 0;
  CLI::Option* computed_on_opt = nullptr;
  CLI::Option* graph_iri_opt = nullptr;
  CLI::Option* clock_opt = nullptr;
  CLI::Option* endpoint_opt = nullptr;
  CLI::Option* append_opt = nullptr;
  CLI::Option* metrics_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

int run_assess(const AssessOpts& opts) {
  config::CliConfig cfg = opts.common.effective();
  if (opts.computed_on_opt->count()) cfg.computed_on = opts.computed_on;
  if (opts.graph_iri_opt->count()) cfg.graph_iri = opts.graph_iri;
  if (opts.clock_opt->count()) cfg.clock = opts.clock;
  if (opts.endpoint_opt->count()) cfg.endpoint = opts.endpoint;
  if (opts.metrics_opt->count()) cfg.metrics = opts.metrics;
  if (opts.seed_opt->count()) cfg.seed = opts.seed;

  if (!cfg.computed_on) fail(kExitUsage, "assess needs --computed-on");
  std::string input = require_input(cfg, "assess");
  Vocabulary vocabulary = load_vocabulary(cfg.extension);

  std::vector<std::string> names = cfg.metrics;
  if (names.empty()) {
    names = {"DatatypeConsistencyMetric", "LabeledResourceMetric",
             "ExternalLinkageMetric"};
  }
  std::vector<daq::MetricDescriptor> selected;
  std::set<std::string> seen;
  for (const std::string& name : names) {
    if (name == "all") {
      for (const daq::MetricDescriptor& d : vocabulary.descriptors) {
        if (seen.insert(d.metric_class).second) selected.push_back(d);
      }
      continue;
    }
    const daq::MetricDescriptor& d = resolve_metric(name, vocabulary);
    if (seen.insert(d.metric_class).second) selected.push_back(d);
  }

  metrics::AssessmentJob job;
  job.target = load_dataset(input, cfg.format);
  job.computed_on = *cfg.computed_on;
  job.selected = std::move(selected);
  job.timestamp = cfg.clock ? checked_clock(*cfg.clock) : now_iso8601();
  job.probes = probe_settings(cfg);

  std::vector<metrics::MetricOutcome> outcomes = metrics::assess(job);
  for (const metrics::MetricOutcome& outcome : outcomes) {
    if (outcome.error) {
      std::cerr << "warning: " << iri::local_name(outcome.descriptor.metric_class)
                << ": " << *outcome.error << "\n";
    }
  }

  std::string graph_iri =
      cfg.graph_iri ? *cfg.graph_iri : *cfg.computed_on + "/quality";
  auto built = quality::build_quality_graph(outcomes, *cfg.computed_on,
                                            job.timestamp, graph_iri);
  if (!built.ok()) fail(kExitUsage, built.error());

  rdf::QuadDataset result = std::move(built.value());
  if (opts.append_opt->count()) {
    rdf::QuadDataset existing = load_dataset(opts.append_path, cfg.format);
    auto merged = quality::merge_runs(existing, result, graph_iri);
    if (!merged.ok()) fail(kExitCheckFailed, merged.error());
    result = std::move(merged.value());
  }

  rdf::Format out_format = format_or(cfg.format, cfg.output, rdf::Format::TriG);
  write_output(rdf::serialize(result, out_format), cfg.output);
  return kExitOk;
}

// ---- validate ----

struct ValidateOpts {
  Common common;
  std::string graph_iri;
  bool json = false;
  CLI::Option* graph_iri_opt = nullptr;
};

int run_validate(const ValidateOpts& opts) {
  config::CliConfig cfg = opts.common.effective();
  if (opts.graph_iri_opt->count()) cfg.graph_iri = opts.graph_iri;

  std::string input = require_input(cfg, "validate");
  Vocabulary vocabulary = load_vocabulary(cfg.extension);
  rdf::QuadDataset data = load_dataset(input, cfg.format);
  std::string graph_iri =
      cfg.graph_iri ? *cfg.graph_iri : single_named_graph(data);

  quality::ValidationReport report =
      quality::validate(data, graph_iri, vocabulary.tbox);
  write_output(opts.json ? quality::report_json(report)
                         : quality::report_lines(report),
               cfg.output);
  if (report.passed()) {
    std::cerr << graph_iri << ": quality graph is well formed\n";
    return kExitOk;
  }
  std::cerr << graph_iri << ": " << report.violations.size()
            << " violation(s)\n";
  return kExitCheckFailed;
}

// ---- group ----

struct GroupOpts {
  Common common;
  std::string class_name;
  std::string group_iri;
  std::string target_graph;
  CLI::Option* group_iri_opt = nullptr;
  CLI::Option* target_graph_opt = nullptr;
};

std::string resolve_group_class(const std::string& name,
                                const Vocabulary& vocabulary) {
  if (iri::is_absolute(name)) return name;
  std::set<std::string> candidates;
  for (const std::string& core :
       {vocab::daq_Category, vocab::daq_Dimension, vocab::daq_Metric}) {
    if (iri::local_name(core) == name) candidates.insert(core);
  }
  for (const daq::MetricDescriptor& d : vocabulary.descriptors) {
    for (const std::string& cls :
         {d.metric_class, d.dimension_class, d.category_class}) {
      if (iri::local_name(cls) == name) candidates.insert(cls);
    }
  }
  if (candidates.empty()) fail(kExitUsage, "unknown class: " + name);
  if (candidates.size() > 1) {
    fail(kExitUsage, "class name is ambiguous: " + name);
  }
  return *candidates.begin();
}

int run_group(const GroupOpts& opts) {
  config::CliConfig cfg = opts.common.effective();
  std::string input = require_input(cfg, "group");
  Vocabulary vocabulary = load_vocabulary(cfg.extension);
  rdf::QuadDataset data = load_dataset(input, cfg.format);

  std::string class_iri = resolve_group_class(opts.class_name, vocabulary);
  std::string group_iri =
      opts.group_iri_opt->count()
          ? opts.group_iri
          : "http://purl.org/qualcube/group/" + util::fnv1a64_hex(class_iri);
  std::optional<std::string> target_graph;
  if (opts.target_graph_opt->count()) target_graph = opts.target_graph;

  auto [group, quads] = analytics::group_by_class(data, class_iri,
                                                  vocabulary.tbox, group_iri,
                                                  target_graph);
  rdf::QuadDataset out;
  out.merge_prefixes(data);
  out.add_prefix("qb", vocab::kQb);
  for (const rdf::Quad& q : quads) out.add(q);

  rdf::Format out_format = format_or(cfg.format, cfg.output, rdf::Format::TriG);
  write_output(rdf::serialize(out, out_format), cfg.output);
  std::cerr << group_iri << ": " << group.members.size()
            << " observation(s) grouped by " << class_iri << "\n";
  return kExitOk;
}

// ---- rank ----

struct RankOpts {
  Common common;
  std::string weights_path;
  std::string normalization;
  std::string missing_policy;
  std::vector<std::string> computed_on;
  CLI::Option* weights_opt = nullptr;
  CLI::Option* normalization_opt = nullptr;
  CLI::Option* missing_opt = nullptr;
  CLI::Option* computed_on_opt = nullptr;
};

int run_rank(const RankOpts& opts) {
  config::CliConfig cfg = opts.common.effective();
  if (opts.normalization_opt->count()) cfg.normalization = opts.normalization;
  if (opts.missing_opt->count()) cfg.missing_policy = opts.missing_policy;

  std::string input = require_input(cfg, "rank");
  Vocabulary vocabulary = load_vocabulary(cfg.extension);
  rdf::QuadDataset data = load_dataset(input, cfg.format);

  analytics::RankingProfile profile;
  profile.weights = weight_file_or_config(opts.weights_opt, opts.weights_path,
                                          cfg.weights, vocabulary);
  if (profile.weights.empty()) fail(kExitUsage, "rank needs --weights");
  if (cfg.normalization) {
    if (*cfg.normalization == "none") {
      profile.normalization = analytics::Normalization::None;
    } else if (*cfg.normalization == "minmax") {
      profile.normalization = analytics::Normalization::MinMaxWithinCohort;
    } else {
      fail(kExitUsage, "unknown normalization: " + *cfg.normalization +
                           " (expected none or minmax)");
    }
  }
  if (cfg.missing_policy) {
    if (*cfg.missing_policy == "zero") {
      profile.missing_policy = analytics::MissingPolicy::ScoreZero;
    } else if (*cfg.missing_policy == "exclude") {
      profile.missing_policy = analytics::MissingPolicy::Exclude;
    } else {
      fail(kExitUsage, "unknown missing policy: " + *cfg.missing_policy +
                           " (expected zero or exclude)");
    }
  }

  std::set<std::string> candidates(opts.computed_on.begin(),
                                   opts.computed_on.end());
  if (candidates.empty()) {
    for (const quality::Observation& obs :
         analytics::all_observations(data, vocabulary.tbox)) {
      candidates.insert(obs.computed_on);
    }
  }

  std::string out;
  for (const analytics::RankEntry& entry :
       analytics::rank(candidates, data, profile, vocabulary.tbox)) {
    out += entry.computed_on + "\t" + util::format_double(entry.score) + "\n";
  }
  write_output(out, cfg.output);
  return kExitOk;
}

// ---- trend ----

struct TrendOpts {
  Common common;
  std::string metric;
  std::vector<std::string> computed_on;
};

int run_trend(const TrendOpts& opts) {
  config::CliConfig cfg = opts.common.effective();
  std::string input = require_input(cfg, "trend");
  Vocabulary vocabulary = load_vocabulary(cfg.extension);
  rdf::QuadDataset data = load_dataset(input, cfg.format);
  if (opts.computed_on.empty()) {
    fail(kExitUsage, "trend needs at least one --computed-on");
  }

  analytics::TrendResult result =
      analytics::trend(data, metric_class_of(opts.metric, vocabulary),
                       opts.computed_on, vocabulary.tbox);
  for (const std::string& notice : result.skipped) {
    std::cerr << "warning: " << notice << "\n";
  }
  std::string out;
  for (const analytics::TrendPoint& point : result.series.points) {
    out += point.computed_on + "\t" + point.timestamp + "\t" +
           util::format_double(point.value) + "\n";
  }
  write_output(out, cfg.output);
  return kExitOk;
}

// ---- stars ----

struct StarsOpts {
  Common common;
  std::string computed_on;
  std::string thresholds_path;
  int base_stars = 5;
  CLI::Option* computed_on_opt = nullptr;
  CLI::Option* thresholds_opt = nullptr;
  CLI::Option* base_stars_opt = nullptr;
};

int run_stars(const StarsOpts& opts) {
  config::CliConfig cfg = opts.common.effective();
  if (opts.computed_on_opt->count()) cfg.computed_on = opts.computed_on;
  if (opts.base_stars_opt->count()) cfg.base_stars = opts.base_stars;

  std::string input = require_input(cfg, "stars");
  if (!cfg.computed_on) fail(kExitUsage, "stars needs --computed-on");
  Vocabulary vocabulary = load_vocabulary(cfg.extension);
  rdf::QuadDataset data = load_dataset(input, cfg.format);

  std::map<std::string, double> thresholds = weight_file_or_config(
      opts.thresholds_opt, opts.thresholds_path, cfg.thresholds, vocabulary);

  analytics::StarRating rating =
      analytics::six_star(*cfg.computed_on, data, thresholds,
                          cfg.base_stars.value_or(5), vocabulary.tbox);
  write_output(std::to_string(rating.stars) + "\n", cfg.output);
  for (const std::string& reason : rating.reasons) {
    std::cerr << "sixth star withheld: " << reason << "\n";
  }
  return rating.reasons.empty() ? kExitOk : kExitCheckFailed;
}

// ---- chart ----

struct ChartOpts {
  Common common;
  std::string kind = "hbar";
  std::string title = "Quality metrics";
  bool csv = false;
  std::vector<std::string> computed_on;
  std::vector<std::string> metrics;
  CLI::Option* metrics_opt = nullptr;
};

int run_chart(const ChartOpts& opts) {
  config::CliConfig cfg = opts.common.effective();
  if (opts.metrics_opt->count()) cfg.metrics = opts.metrics;

  std::string input = require_input(cfg, "chart");
  Vocabulary vocabulary = load_vocabulary(cfg.extension);
  rdf::QuadDataset data = load_dataset(input, cfg.format);
  charts::ChartKind kind = *charts::chart_kind_from_name(opts.kind);

  std::vector<quality::Observation> pool =
      analytics::all_observations(data, vocabulary.tbox);

  std::vector<std::string> rows = opts.computed_on;
  if (rows.empty()) {
    std::set<std::string> seen;
    for (const quality::Observation& obs : pool) {
      if (seen.insert(obs.computed_on).second) rows.push_back(obs.computed_on);
    }
    std::sort(rows.begin(), rows.end());
  }

  std::vector<std::string> columns;
  std::set<std::string> seen;
  for (const std::string& name : cfg.metrics) {
    if (name == "all") {
      for (const daq::MetricDescriptor& d : vocabulary.descriptors) {
        if (seen.insert(d.metric_class).second) {
          columns.push_back(d.metric_class);
        }
      }
      continue;
    }
    std::string cls = metric_class_of(name, vocabulary);
    if (seen.insert(cls).second) columns.push_back(cls);
  }
  if (columns.empty()) {
    for (const quality::Observation& obs : pool) {
      if (!obs.metric_class.empty() &&
          seen.insert(obs.metric_class).second) {
        columns.push_back(obs.metric_class);
      }
    }
    std::sort(columns.begin(), columns.end());
  }

  charts::ChartSpec spec = charts::chart_spec(data, kind, rows, columns,
                                              vocabulary.tbox, opts.title);
  write_output(opts.csv ? charts::export_csv(spec) : charts::render_svg(spec),
               cfg.output);
  return kExitOk;
}

// ---- vocab dump / extend check ----

int run_vocab_dump(const std::optional<std::string>& output) {
  write_output(metrics::shipped_extension_turtle(), output);
  return kExitOk;
}

int run_extend_check(const std::string& path,
                     const std::optional<std::string>& output) {
  rdf::QuadDataset ext = load_dataset(path, std::nullopt, rdf::Format::Turtle);
  auto loaded = daq::load_extension(ext, metrics::shipped_metrics().merged);
  if (!loaded.ok()) {
    std::string out;
    for (const std::string& defect : loaded.error().defects) {
      out += defect + "\n";
    }
    write_output(out, output);
    return kExitCheckFailed;
  }
  std::string out = "ok: " + std::to_string(loaded.value().descriptors.size()) +
                    " metric class(es)\n";
  for (const daq::MetricDescriptor& d : loaded.value().descriptors) {
    out += d.metric_class + "\n";
  }
  write_output(out, output);
  return kExitOk;
}

std::optional<std::string> plain_output(const CLI::Option* opt,
                                        const std::string& value) {
  if (opt->count()) return value;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quality metrics over RDF datasets as daQ quality metadata"};
  app.require_subcommand(1);

  AssessOpts assess;
  CLI::App* assess_cmd = app.add_subcommand(
      "assess", "run metrics over a dataset and emit its quality graph");
  assess.common.wire(assess_cmd);
  assess.computed_on_opt = assess_cmd->add_option(
      "--computed-on", assess.computed_on, "IRI of the assessed dataset");
  assess.graph_iri_opt = assess_cmd->add_option(
      "--graph-iri", assess.graph_iri,
      "quality graph IRI (default: <computed-on>/quality)");
  assess.metrics_opt = assess_cmd->add_option(
      "--metrics", assess.metrics,
      "metric classes to run, by IRI or local name; 'all' selects every "
      "known metric (default: the offline metrics)");
  assess.endpoint_opt = assess_cmd->add_option(
      "--endpoint", assess.endpoint, "SPARQL endpoint URL for endpoint metrics");
  assess.seed_opt = assess_cmd->add_option(
      "--seed", assess.seed, "probe sampling seed (default: 0)");
  assess.clock_opt = assess_cmd->add_option(
      "--clock", assess.clock,
      "ISO-8601 timestamp override for reproducible runs (default: now)");
  assess.append_opt = assess_cmd->add_option(
      "--append", assess.append_path,
      "existing quality graph file to merge the new run into");

  ValidateOpts validate;
  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "check a quality graph against the daQ structure");
  validate.common.wire(validate_cmd);
  validate.graph_iri_opt = validate_cmd->add_option(
      "--graph-iri", validate.graph_iri,
      "quality graph to check (default: the input's only named graph)");
  validate_cmd->add_flag("--json", validate.json, "emit the report as JSON");

  GroupOpts group;
  CLI::App* group_cmd = app.add_subcommand(
      "group", "collect observations reachable from instances of a class");
  group.common.wire(group_cmd);
  group_cmd
      ->add_option("class", group.class_name,
                   "class IRI or local name to group by")
      ->required();
  group.group_iri_opt = group_cmd->add_option(
      "--group-iri", group.group_iri,
      "IRI of the emitted group (default: derived from the class)");
  group.target_graph_opt = group_cmd->add_option(
      "--graph-iri", group.target_graph,
      "named graph for the emitted quads (default: default graph)");

  RankOpts rank;
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "order datasets by weighted quality score");
  rank.common.wire(rank_cmd);
  rank.weights_opt = rank_cmd->add_option(
      "--weights", rank.weights_path,
      "JSON file of metric class to weight");
  rank.normalization_opt =
      rank_cmd->add_option("--normalization", rank.normalization,
                           "value normalization")
          ->check(CLI::IsMember({"none", "minmax"}));
  rank.missing_opt = rank_cmd->add_option(
      "--missing", rank.missing_policy, "policy for missing metric values")
          ->check(CLI::IsMember({"zero", "exclude"}));
  rank.computed_on_opt = rank_cmd->add_option(
      "--computed-on", rank.computed_on,
      "candidate dataset IRIs (default: every assessed dataset)");

  TrendOpts trend;
  CLI::App* trend_cmd = app.add_subcommand(
      "trend", "walk one metric across an ordered version sequence");
  trend.common.wire(trend_cmd);
  trend_cmd
      ->add_option("--metric", trend.metric, "metric class IRI or local name")
      ->required();
  trend_cmd->add_option("--computed-on", trend.computed_on,
                        "version IRIs in walk order");

  StarsOpts stars;
  CLI::App* stars_cmd = app.add_subcommand(
      "stars", "award the sixth quality star against thresholds");
  stars.common.wire(stars_cmd);
  stars.computed_on_opt = stars_cmd->add_option(
      "--computed-on", stars.computed_on, "IRI of the rated dataset");
  stars.thresholds_opt = stars_cmd->add_option(
      "--thresholds", stars.thresholds_path,
      "JSON file of metric class to minimum value");
  stars.base_stars_opt = stars_cmd->add_option(
      "--base-stars", stars.base_stars,
      "stars already earned on the five-star scale (default: 5)");

  ChartOpts chart;
  CLI::App* chart_cmd =
      app.add_subcommand("chart", "export quality metrics as SVG or CSV");
  chart.common.wire(chart_cmd);
  chart_cmd->add_option("--kind", chart.kind, "chart kind (default: hbar)")
      ->check(CLI::IsMember({"hbar", "vbar", "radar", "lines"}));
  chart_cmd->add_option("--computed-on", chart.computed_on,
                        "datasets to plot, in order (default: all, sorted)");
  chart.metrics_opt = chart_cmd->add_option(
      "--metrics", chart.metrics,
      "metric classes to plot (default: all with observations)");
  chart_cmd->add_option("--title", chart.title, "chart title");
  chart_cmd->add_flag("--csv", chart.csv, "emit CSV instead of SVG");

  CLI::App* vocab_cmd =
      app.add_subcommand("vocab", "metric vocabulary utilities");
  vocab_cmd->require_subcommand(1);
  std::string vocab_output;
  CLI::App* vocab_dump_cmd = vocab_cmd->add_subcommand(
      "dump", "print the shipped metric vocabulary as Turtle");
  CLI::Option* vocab_output_opt = vocab_dump_cmd->add_option(
      "--output", vocab_output, "output file (default: stdout)");

  CLI::App* extend_cmd =
      app.add_subcommand("extend", "extension vocabulary utilities");
  extend_cmd->require_subcommand(1);
  std::string extend_path;
  std::string extend_output;
  CLI::App* extend_check_cmd = extend_cmd->add_subcommand(
      "check", "lint an extension vocabulary file");
  extend_check_cmd->add_option("file", extend_path, "extension file")
      ->required();
  CLI::Option* extend_output_opt = extend_check_cmd->add_option(
      "--output", extend_output, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (assess_cmd->parsed()) return run_assess(assess);
    if (validate_cmd->parsed()) return run_validate(validate);
    if (group_cmd->parsed()) return run_group(group);
    if (rank_cmd->parsed()) return run_rank(rank);
    if (trend_cmd->parsed()) return run_trend(trend);
    if (stars_cmd->parsed()) return run_stars(stars);
    if (chart_cmd->parsed()) return run_chart(chart);
    if (vocab_dump_cmd->parsed()) {
      return run_vocab_dump(plain_output(vocab_output_opt, vocab_output));
    }
    if (extend_check_cmd->parsed()) {
      return run_extend_check(extend_path,
                              plain_output(extend_output_opt, extend_output));
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
