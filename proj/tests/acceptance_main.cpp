// Acceptance gate: nine structural and behavioural criteria over the whole
// toolkit, each reported as a single PASS/FAIL line. Exits nonzero when any
// criterion fails. Some criteria carry a wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <unistd.h>

#include <httplib.h>

#include "qualcube/analytics.hpp"
#include "qualcube/charts.hpp"
#include "qualcube/isomorphism.hpp"
#include "qualcube/metrics.hpp"
#include "qualcube/parse.hpp"
#include "qualcube/probe.hpp"
#include "qualcube/quality_graph.hpp"
#include "qualcube/serialize.hpp"
#include "qualcube/tbox.hpp"
#include "qualcube/util.hpp"
#include "qualcube/vocab.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"
#include "support/mock_server.hpp"
#include "support/oracles.hpp"
#include "support/svg_check.hpp"

using namespace qualcube;
using namespace qualcube::metrics;
using rdf::Quad;
using rdf::QuadDataset;
using rdf::Term;
namespace v = qualcube::vocab;
namespace fs = std::filesystem;

namespace {

// Collects failure notes for one criterion; the first few are printed.
struct Checker {
  std::size_t failed = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& note) {
    if (ok) return;
    ++failed;
    if (notes.size() < 8) {
      std::string flat = note;
      std::replace(flat.begin(), flat.end(), '\n', ' ');
      notes.push_back(flat);
    }
  }
};

struct AcceptanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- shared fixture helpers ----

const daq::TBox& shipped_tbox() { return shipped_metrics().merged; }

const daq::MetricDescriptor& shipped_descriptor(const std::string& cls) {
  const daq::MetricDescriptor* d =
      find_descriptor(shipped_metrics().descriptors, cls);
  if (!d) throw AcceptanceError("no shipped descriptor for " + cls);
  return *d;
}

MetricOutcome ok_outcome(const std::string& cls, Term value) {
  const daq::MetricDescriptor& d = shipped_descriptor(cls);
  MetricResult result{cls, std::move(value), d.unit_measure, std::nullopt};
  return {d, std::move(result), std::nullopt};
}

QuadDataset make_run(const std::string& graph_iri, const std::string& version,
                     const std::string& timestamp,
                     const std::vector<std::pair<std::string, Term>>& values) {
  std::vector<MetricOutcome> outcomes;
  outcomes.reserve(values.size());
  for (const auto& [cls, value] : values) {
    outcomes.push_back(ok_outcome(cls, value));
  }
  auto built =
      quality::build_quality_graph(outcomes, version, timestamp, graph_iri);
  if (!built.ok()) throw AcceptanceError("fixture build: " + built.error());
  return built.value();
}

QuadDataset unioned(const std::vector<QuadDataset>& parts) {
  QuadDataset out;
  for (const QuadDataset& part : parts) {
    out.merge_prefixes(part);
    for (const Quad& q : part.quads()) out.add(q);
  }
  return out;
}

std::vector<daq::MetricDescriptor> offline_selection() {
  return {shipped_descriptor(qm_DatatypeConsistencyMetric),
          shipped_descriptor(qm_LabeledResourceMetric),
          shipped_descriptor(qm_ExternalLinkageMetric)};
}

AssessmentJob offline_job(QuadDataset ds) {
  AssessmentJob job;
  job.target = std::move(ds);
  job.computed_on = "http://example.org/dataset";
  job.selected = offline_selection();
  job.timestamp = "2026-08-15T12:00:00Z";
  return job;
}

const MetricResult* result_of(const std::vector<MetricOutcome>& outcomes,
                              const std::string& metric_class) {
  for (const MetricOutcome& o : outcomes) {
    if (o.descriptor.metric_class == metric_class && o.result.has_value()) {
      return &*o.result;
    }
  }
  return nullptr;
}

const std::string kV1 = "http://example.org/data/v1";
const std::string kV2 = "http://example.org/data/v2";
const std::string kV3 = "http://example.org/data/v3";
const std::string kQ1 = "http://example.org/quality/r1";
const std::string kQ2 = "http://example.org/quality/r2";
const std::string kQ3 = "http://example.org/quality/r3";
const std::string kT1 = "2026-08-01T00:00:00Z";
const std::string kT2 = "2026-08-02T00:00:00Z";
const std::string kT3 = "2026-08-03T00:00:00Z";

const std::vector<std::string> kThreeMetrics = {qm_RdfAvailabilityMetric,
                                                qm_DereferenceabilityMetric,
                                                qm_DatatypeConsistencyMetric};

// Two versions, three metrics, every cell present.
QuadDataset two_by_three() {
  return unioned(
      {make_run(kQ1, kV1, kT1,
                {{qm_RdfAvailabilityMetric, Term::boolean(true)},
                 {qm_DereferenceabilityMetric, Term::double_value(0.5)},
                 {qm_DatatypeConsistencyMetric, Term::double_value(0.2)}}),
       make_run(kQ2, kV2, kT2,
                {{qm_RdfAvailabilityMetric, Term::boolean(false)},
                 {qm_DereferenceabilityMetric, Term::double_value(0.7)},
                 {qm_DatatypeConsistencyMetric, Term::double_value(0.4)}})});
}

QuadDataset three_versions() {
  return unioned(
      {make_run(kQ1, kV1, kT1,
                {{qm_RdfAvailabilityMetric, Term::boolean(true)},
                 {qm_DereferenceabilityMetric, Term::double_value(0.2)},
                 {qm_DatatypeConsistencyMetric, Term::double_value(1.0)}}),
       make_run(kQ2, kV2, kT2,
                {{qm_RdfAvailabilityMetric, Term::boolean(false)},
                 {qm_DereferenceabilityMetric, Term::double_value(0.5)},
                 {qm_DatatypeConsistencyMetric, Term::double_value(0.6)}}),
       make_run(kQ3, kV3, kT3,
                {{qm_RdfAvailabilityMetric, Term::boolean(true)},
                 {qm_DereferenceabilityMetric, Term::double_value(0.9)},
                 {qm_DatatypeConsistencyMetric, Term::double_value(0.3)}})});
}

std::vector<std::string> csv_value_cells(const std::string& csv) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  bool header = true;
  while (start < csv.size()) {
    std::size_t end = csv.find("\r\n", start);
    if (end == std::string::npos) break;
    std::string line = csv.substr(start, end - start);
    start = end + 2;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream fields(line);
    std::string cell;
    bool first = true;
    while (std::getline(fields, cell, ',')) {
      if (!first && !cell.empty()) cells.push_back(cell);
      first = false;
    }
  }
  return cells;
}

std::vector<std::pair<double, double>> parse_points(const std::string& attr) {
  std::vector<std::pair<double, double>> points;
  std::istringstream stream(attr);
  std::string pair;
  while (stream >> pair) {
    std::size_t comma = pair.find(',');
    if (comma == std::string::npos) {
      throw AcceptanceError("malformed points attribute: " + attr);
    }
    points.emplace_back(std::stod(pair.substr(0, comma)),
                        std::stod(pair.substr(comma + 1)));
  }
  return points;
}

// ---- criterion 1: corpus round-trips ----

void c1_round_trip(Checker& check) {
  std::vector<fs::path> files = testsupport::corpus_files();
  check.expect(files.size() >= 30, "corpus holds only " +
                                       std::to_string(files.size()) +
                                       " documents, need 30");
  for (const fs::path& file : files) {
    std::string name = file.filename().string();
    auto format = rdf::format_from_path(name);
    if (!format) {
      check.expect(false, name + ": suffix maps to no format");
      continue;
    }
    auto parsed =
        rdf::parse_document(testsupport::read_file(file), *format);
    if (!parsed.ok()) {
      check.expect(false, name + ": " + parsed.error().message);
      continue;
    }
    std::string text = rdf::serialize(parsed.value(), *format);
    auto reparsed = rdf::parse_document(text, *format);
    if (!reparsed.ok()) {
      check.expect(false, name + ": serialized form does not parse: " +
                              reparsed.error().message);
      continue;
    }
    check.expect(rdf::isomorphic(parsed.value(), reparsed.value()),
                 name + ": round-trip is not isomorphic");

    std::string canon = rdf::to_canonical_nquads(parsed.value());
    auto round = rdf::parse_document(canon, rdf::Format::NQuads);
    if (!round.ok()) {
      check.expect(false, name + ": canonical N-Quads does not parse");
      continue;
    }
    check.expect(rdf::to_canonical_nquads(round.value()) == canon,
                 name + ": canonical N-Quads is not idempotent");
  }
}

// ---- criterion 2: randomized assess runs validate cleanly ----

void c2_constructive(Checker& check) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::size_t quad_count = 50 + (seed - 1) * 23;  // spans 50..487
    QuadDataset ds = testsupport::random_metric_dataset(seed, quad_count);
    AssessmentJob job = offline_job(std::move(ds));
    std::vector<MetricOutcome> outcomes = assess(job);
    std::string graph =
        "http://example.org/quality/run" + std::to_string(seed);
    auto built = quality::build_quality_graph(outcomes, job.computed_on,
                                              job.timestamp, graph);
    if (!built.ok()) {
      check.expect(false,
                   "seed " + std::to_string(seed) + ": " + built.error());
      continue;
    }
    quality::ValidationReport report =
        quality::validate(built.value(), graph, shipped_tbox());
    check.expect(report.passed(), "seed " + std::to_string(seed) + ": " +
                                      quality::report_lines(report));
  }
}

// ---- criterion 3: targeted mutations ----

void c3_mutations(Checker& check) {
  const std::string target = "http://example.org/data/v1";
  const std::string g = "http://example.org/quality/mutant";
  const std::string t = "2026-08-15T12:00:00Z";
  QuadDataset good =
      make_run(g, target, t,
               {{qm_RdfAvailabilityMetric, Term::boolean(true)},
                {qm_DatatypeConsistencyMetric, Term::double_value(0.75)}});
  check.expect(quality::validate(good, g, shipped_tbox()).passed(),
               "fixture must validate before mutation");

  const daq::MetricDescriptor& boolean_metric =
      shipped_descriptor(qm_RdfAvailabilityMetric);
  const Term bool_obs = Term::iri(
      g + "/obs/" +
      util::fnv1a64_hex(qm_RdfAvailabilityMetric + "\n" + target + "\n" + t));
  const Term bool_instance = Term::iri(g + "/instance/RdfAvailabilityMetric");
  auto in_g = [&](Term s, Term p, Term o) {
    return Quad(std::move(s), std::move(p), std::move(o), Term::iri(g));
  };

  struct Mutation {
    quality::ViolationCode code;
    const char* name;
    std::function<bool(std::set<Quad>&)> edit;
  };
  const std::vector<Mutation> mutations = {
      {quality::ViolationCode::V1, "graph typing removed",
       [&](std::set<Quad>& quads) {
         return quads.erase(in_g(Term::iri(g), Term::iri(v::rdf_type),
                                 Term::iri(v::daq_QualityGraph))) == 1;
       }},
      {quality::ViolationCode::V2, "structure statement removed",
       [&](std::set<Quad>& quads) {
         return quads.erase(in_g(Term::iri(g), Term::iri(v::qb_structure),
                                 Term::iri(v::daq_dsd))) == 1;
       }},
      {quality::ViolationCode::V3, "computedOn removed",
       [&](std::set<Quad>& quads) {
         return quads.erase(in_g(bool_obs, Term::iri(v::daq_computedOn),
                                 Term::iri(target))) == 1;
       }},
      {quality::ViolationCode::V4, "value datatype contradicts the metric",
       [&](std::set<Quad>& quads) {
         if (quads.erase(in_g(bool_obs, Term::iri(v::daq_value),
                              Term::boolean(true))) != 1) {
           return false;
         }
         quads.insert(in_g(bool_obs, Term::iri(v::daq_value),
                           Term::literal("true", v::xsd_string)));
         return true;
       }},
      {quality::ViolationCode::V5, "metric instance typing removed",
       [&](std::set<Quad>& quads) {
         return quads.erase(in_g(bool_instance, Term::iri(v::rdf_type),
                                 Term::iri(boolean_metric.metric_class))) ==
                1;
       }},
      {quality::ViolationCode::V6, "hasObservation link removed",
       [&](std::set<Quad>& quads) {
         return quads.erase(in_g(bool_instance,
                                 Term::iri(v::daq_hasObservation),
                                 bool_obs)) == 1;
       }},
      {quality::ViolationCode::V7, "dimension loses its metric link",
       [&](std::set<Quad>& quads) {
         return quads.erase(
                    in_g(Term::iri(g + "/instance/Availability"),
                         Term::iri(boolean_metric.has_metric_sub_property),
                         bool_instance)) == 1;
       }},
  };

  std::size_t killed = 0;
  for (const Mutation& m : mutations) {
    std::set<Quad> quads = good.quads();
    if (!m.edit(quads)) {
      check.expect(false, std::string(m.name) + ": fixture quad missing");
      continue;
    }
    QuadDataset bad;
    for (const Quad& q : quads) bad.add(q);
    quality::ValidationReport report =
        quality::validate(bad, g, shipped_tbox());
    bool exact =
        report.violations.size() == 1 && report.violations[0].code == m.code;
    check.expect(exact, std::string(m.name) + ": expected exactly one " +
                            std::string(quality::violation_code_name(m.code)) +
                            ", got " + quality::report_lines(report));
    if (exact) ++killed;
  }
  check.expect(killed == mutations.size(),
               std::to_string(killed) + "/7 mutations detected");
}

// ---- criterion 4: grouping versus a matrix reachability oracle ----

// Reachability over an explicit boolean matrix, in contrast to the
// breadth-first search inside group_by_class.
std::set<std::string> oracle_group(const QuadDataset& data,
                                   const std::string& class_iri,
                                   const daq::TBox& t) {
  std::vector<Term> nodes;
  std::map<Term, std::size_t> index_of;
  auto index = [&](const Term& term) {
    auto found = index_of.find(term);
    if (found != index_of.end()) return found->second;
    index_of.emplace(term, nodes.size());
    nodes.push_back(term);
    return nodes.size() - 1;
  };
  for (const Quad& q : data.quads()) {
    index(q.subject);
    index(q.object);
  }

  std::size_t n = nodes.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const Quad& q : data.quads()) {
    const std::string& p = q.predicate.value();
    if (t.is_subproperty(p, v::daq_hasDimension) ||
        t.is_subproperty(p, v::daq_hasMetric)) {
      reach[index(q.subject)][index(q.object)] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }

  std::set<std::string> wanted_classes{class_iri};
  for (const auto& [child, parent] : t.sub_class_of) {
    if (parent == class_iri) wanted_classes.insert(child);
  }
  std::set<std::size_t> seeds;
  for (const Quad& q : data.quads()) {
    if (q.predicate.value() == v::rdf_type && q.subject.is_iri() &&
        q.object.is_iri() && wanted_classes.count(q.object.value())) {
      seeds.insert(index(q.subject));
    }
  }

  std::set<std::string> members;
  for (const Quad& q : data.quads()) {
    if (q.predicate.value() != v::daq_hasObservation || !q.object.is_iri()) {
      continue;
    }
    std::size_t holder = index(q.subject);
    for (std::size_t seed : seeds) {
      if (reach[seed][holder]) {
        members.insert(q.object.value());
        break;
      }
    }
  }
  return members;
}

struct RandomDaq {
  QuadDataset data;
  daq::TBox t;
  std::vector<std::string> class_iris;
};

// Random category/dimension/metric shapes with observations and noise,
// spread over two named graphs.
RandomDaq random_daq(std::uint64_t seed) {
  util::SplitMix64 rng(seed);
  const std::string ns = "http://example.org/rand#";
  std::size_t categories = 1 + rng.next_below(3);
  std::size_t dimensions = 1 + rng.next_below(4);
  std::size_t metric_classes = 1 + rng.next_below(5);

  RandomDaq out;
  daq::TBox ext = daq::builtin_daq_tbox();
  std::vector<std::string> cats, dims, mets;
  for (std::size_t i = 0; i < categories; ++i) {
    cats.push_back(ns + "Cat" + std::to_string(i));
    ext.sub_class_of.insert({cats.back(), v::daq_Category});
  }
  for (std::size_t i = 0; i < dimensions; ++i) {
    dims.push_back(ns + "Dim" + std::to_string(i));
    ext.sub_class_of.insert({dims.back(), v::daq_Dimension});
    ext.sub_property_of.insert(
        {ns + "hasDim" + std::to_string(i), v::daq_hasDimension});
  }
  for (std::size_t i = 0; i < metric_classes; ++i) {
    mets.push_back(ns + "Met" + std::to_string(i));
    ext.sub_class_of.insert({mets.back(), v::daq_Metric});
    ext.sub_property_of.insert(
        {ns + "hasMet" + std::to_string(i), v::daq_hasMetric});
  }
  out.t = daq::closure(ext);
  out.class_iris = cats;
  out.class_iris.insert(out.class_iris.end(), dims.begin(), dims.end());
  out.class_iris.insert(out.class_iris.end(), mets.begin(), mets.end());

  auto graph_term = [&](std::uint64_t pick) {
    return Term::iri(ns + "g" + std::to_string(pick % 2));
  };
  auto add = [&](const std::string& s, const std::string& p, Term o) {
    out.data.add(Quad(Term::iri(s), Term::iri(p), std::move(o),
                      graph_term(rng.next())));
  };

  std::vector<std::string> cat_instances, dim_instances;
  for (std::size_t i = 0; i < cats.size(); ++i) {
    for (std::uint64_t k = 0; k <= rng.next_below(2); ++k) {
      std::string inst =
          ns + "cat" + std::to_string(i) + "_" + std::to_string(k);
      add(inst, v::rdf_type, Term::iri(cats[i]));
      cat_instances.push_back(inst);
    }
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    for (std::uint64_t k = 0; k <= rng.next_below(2); ++k) {
      std::string inst =
          ns + "dim" + std::to_string(i) + "_" + std::to_string(k);
      add(inst, v::rdf_type, Term::iri(dims[i]));
      dim_instances.push_back(inst);
      if (rng.next_below(4) != 0 && !cat_instances.empty()) {
        const std::string& cat =
            cat_instances[rng.next_below(cat_instances.size())];
        add(cat, ns + "hasDim" + std::to_string(rng.next_below(dims.size())),
            Term::iri(inst));
      }
    }
  }
  std::size_t obs_counter = 0;
  for (std::size_t i = 0; i < mets.size(); ++i) {
    for (std::uint64_t k = 0; k <= rng.next_below(2); ++k) {
      std::string inst =
          ns + "met" + std::to_string(i) + "_" + std::to_string(k);
      add(inst, v::rdf_type, Term::iri(mets[i]));
      if (rng.next_below(4) != 0 && !dim_instances.empty()) {
        const std::string& dim =
            dim_instances[rng.next_below(dim_instances.size())];
        add(dim, ns + "hasMet" + std::to_string(rng.next_below(mets.size())),
            Term::iri(inst));
      }
      for (std::uint64_t j = 0; j < rng.next_below(4); ++j) {
        add(inst, v::daq_hasObservation,
            Term::iri(ns + "obs" + std::to_string(obs_counter++)));
      }
    }
  }
  // Odd shapes the traversal must tolerate: an observation hanging off a
  // dimension instance, and noise links that are no sub-properties.
  if (!dim_instances.empty() && rng.next_below(2) == 0) {
    add(dim_instances[0], v::daq_hasObservation,
        Term::iri(ns + "obs" + std::to_string(obs_counter++)));
  }
  for (std::uint64_t j = 0; j < 3; ++j) {
    add(ns + "noiseS" + std::to_string(j), ns + "unrelated",
        Term::iri(ns + "noiseO" + std::to_string(j)));
  }
  return out;
}

void c4_grouping(Checker& check) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    RandomDaq fixture = random_daq(seed);
    check.expect(fixture.data.size() <= 500,
                 "seed " + std::to_string(seed) + ": fixture too large");
    std::vector<std::string> classes = fixture.class_iris;
    classes.push_back(v::daq_Category);
    classes.push_back(v::daq_Dimension);
    classes.push_back(v::daq_Metric);
    for (const std::string& cls : classes) {
      auto [group, quads] = analytics::group_by_class(
          fixture.data, cls, fixture.t, "http://example.org/groups/g");
      std::set<std::string> expected =
          oracle_group(fixture.data, cls, fixture.t);
      check.expect(group.members == expected,
                   "seed " + std::to_string(seed) + " class " + cls +
                       ": members disagree with the oracle");
      std::size_t want_quads =
          group.members.empty() ? 0 : group.members.size() + 1;
      check.expect(quads.size() == want_quads,
                   "seed " + std::to_string(seed) + " class " + cls +
                       ": emitted quad count is off");
    }
  }
}

// ---- criterion 5: shipped metrics versus independent recounts ----

void c5_metric_oracle(Checker& check) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    std::string tag = "seed " + std::to_string(seed);
    QuadDataset ds = testsupport::random_metric_dataset(seed, 40 + seed * 7);
    AssessmentJob job = offline_job(ds);
    std::vector<MetricOutcome> outcomes = assess(job);

    const MetricResult* consistency =
        result_of(outcomes, qm_DatatypeConsistencyMetric);
    const MetricResult* labeled =
        result_of(outcomes, qm_LabeledResourceMetric);
    const MetricResult* linkage =
        result_of(outcomes, qm_ExternalLinkageMetric);
    if (!consistency || !labeled || !linkage) {
      check.expect(false, tag + ": an offline metric produced no result");
      continue;
    }
    check.expect(
        consistency->value ==
            Term::double_value(testsupport::oracle::datatype_consistency(ds)),
        tag + ": datatype consistency disagrees with the recount");
    check.expect(
        labeled->value == Term::double_value(
                              testsupport::oracle::labeled_resource_ratio(ds)),
        tag + ": labeled resource ratio disagrees with the recount");
    check.expect(
        linkage->value ==
            Term::double_value(testsupport::oracle::external_linkage_ratio(
                ds, job.computed_on)),
        tag + ": external linkage ratio disagrees with the recount");

    for (const MetricResult* r : {consistency, labeled, linkage}) {
      double value = std::stod(r->value.value());
      check.expect(value >= 0.0 && value <= 1.0,
                   tag + ": ratio escapes [0,1]: " + r->value.value());
    }
  }

  // Three valid typed literals and one broken one: exactly 0.75.
  QuadDataset quarter;
  Term p = Term::iri("http://example.org/p");
  quarter.add(Quad(Term::iri("http://example.org/a"), p, Term::integer(1)));
  quarter.add(Quad(Term::iri("http://example.org/b"), p,
                   Term::double_value(2.5)));
  quarter.add(Quad(Term::iri("http://example.org/c"), p,
                   Term::boolean(true)));
  quarter.add(Quad(Term::iri("http://example.org/d"), p,
                   Term::literal("not-a-number", v::xsd_integer)));
  auto outcomes = assess(offline_job(quarter));
  const MetricResult* r = result_of(outcomes, qm_DatatypeConsistencyMetric);
  check.expect(r != nullptr && r->value == Term::double_value(0.75),
               "1-of-4-invalid fixture must score exactly 0.75, got " +
                   (r ? r->value.value() : std::string("nothing")));
  check.expect(testsupport::oracle::datatype_consistency(quarter) == 0.75,
               "oracle disagrees on the 1-of-4-invalid fixture");
}

// ---- criterion 6: probe behaviour against a mock server ----

void c6_probes(Checker& check) {
  const std::string turtle_body =
      "@prefix ex: <http://example.org/> .\nex:s ex:p ex:o .\n";
  testsupport::MockServer server([&](httplib::Server& s) {
    s.Get("/dataset", [turtle_body](const httplib::Request&,
                                    httplib::Response& res) {
      res.set_content(turtle_body, "text/turtle");
    });
    s.Get("/slow", [turtle_body](const httplib::Request&,
                                 httplib::Response& res) {
      std::this_thread::sleep_for(std::chrono::milliseconds(400));
      res.set_content(turtle_body, "text/turtle");
    });
    s.Get("/sparql", [](const httplib::Request& req, httplib::Response& res) {
      if (req.get_param_value("query") != "ASK {}") {
        res.status = 400;
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
      res.set_content("{\"head\":{},\"boolean\":true}",
                      "application/sparql-results+json");
    });
  });

  probe::ProbeSettings fast;
  fast.connect_timeout = std::chrono::milliseconds(500);
  fast.request_timeout = std::chrono::milliseconds(2000);

  AssessmentJob job;
  job.selected = {shipped_descriptor(qm_RdfAvailabilityMetric)};
  job.timestamp = "2026-08-15T12:00:00Z";
  job.probes = fast;

  job.computed_on = server.base_url() + "/dataset";
  std::vector<MetricOutcome> reachable = assess(job);
  const MetricResult* up = result_of(reachable, qm_RdfAvailabilityMetric);
  check.expect(up && up->value == Term::boolean(true),
               "availability must be true for valid Turtle");

  job.computed_on = server.base_url() + "/nothing-here";
  std::vector<MetricOutcome> missing = assess(job);
  const MetricResult* down = result_of(missing, qm_RdfAvailabilityMetric);
  check.expect(down && down->value == Term::boolean(false),
               "availability must be false on HTTP 404");

  job.computed_on = server.base_url() + "/slow";
  job.probes.request_timeout = std::chrono::milliseconds(100);
  std::vector<MetricOutcome> timed_out = assess(job);
  const MetricResult* slow = result_of(timed_out, qm_RdfAvailabilityMetric);
  check.expect(slow && slow->value == Term::boolean(false),
               "availability must be false when the response outlives the "
               "request timeout");

  AssessmentJob endpoint_job;
  endpoint_job.target = QuadDataset();
  endpoint_job.computed_on = "http://example.org/dataset";
  endpoint_job.selected = {shipped_descriptor(qm_EndPointAvailabilityMetric),
                           shipped_descriptor(qm_EndPointLatencyMetric)};
  endpoint_job.timestamp = "2026-08-15T12:00:00Z";
  endpoint_job.probes = fast;
  endpoint_job.probes.endpoint_url = server.base_url() + "/sparql";
  std::vector<MetricOutcome> outcomes = assess(endpoint_job);
  const MetricResult* avail =
      result_of(outcomes, qm_EndPointAvailabilityMetric);
  check.expect(avail && avail->value == Term::boolean(true),
               "endpoint availability must be true");
  const MetricResult* latency =
      result_of(outcomes, qm_EndPointLatencyMetric);
  if (!latency) {
    check.expect(false, "endpoint latency produced no result");
    return;
  }
  double seconds = std::stod(latency->value.value());
  check.expect(seconds >= 0.05 && seconds <= 0.15,
               "latency " + latency->value.value() +
                   " s is not within 50 ms of the 100 ms delay");
  check.expect(latency->unit_measure.has_value() &&
                   *latency->unit_measure == kUnitSeconds,
               "latency observation must carry the seconds unit");
}

// ---- criterion 7: analytics invariants ----

void c7_analytics(Checker& check) {
  QuadDataset data = three_versions();

  // Rank order never moves under positive scaling of all weights.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    util::SplitMix64 rng(seed);
    analytics::RankingProfile profile;
    profile.weights[qm_DereferenceabilityMetric] =
        static_cast<double>(rng.next_below(100)) / 10.0;
    profile.weights[qm_DatatypeConsistencyMetric] =
        static_cast<double>(rng.next_below(100)) / 10.0;
    profile.weights[qm_RdfAvailabilityMetric] =
        static_cast<double>(1 + rng.next_below(100)) / 10.0;
    profile.normalization = (seed % 2 == 0)
                                ? analytics::Normalization::MinMaxWithinCohort
                                : analytics::Normalization::None;
    std::vector<analytics::RankEntry> base =
        analytics::rank({kV1, kV2, kV3}, data, profile, shipped_tbox());
    for (double factor : {10.0, 0.25, 7.0}) {
      analytics::RankingProfile scaled = profile;
      for (auto& [metric, weight] : scaled.weights) weight *= factor;
      std::vector<analytics::RankEntry> rescored =
          analytics::rank({kV1, kV2, kV3}, data, scaled, shipped_tbox());
      bool same_order = rescored.size() == base.size();
      for (std::size_t i = 0; same_order && i < base.size(); ++i) {
        same_order = rescored[i].computed_on == base[i].computed_on;
      }
      check.expect(same_order, "seed " + std::to_string(seed) +
                                   ": order moved under scale factor " +
                                   util::format_double(factor));
    }
  }

  // Trend points are sorted by timestamp and survive quad reordering.
  analytics::TrendResult baseline = analytics::trend(
      data, qm_DereferenceabilityMetric, {kV3, kV2, kV1}, shipped_tbox());
  check.expect(baseline.series.points.size() == 3 && baseline.skipped.empty(),
               "trend must yield one point per version");
  for (std::size_t i = 1; i < baseline.series.points.size(); ++i) {
    check.expect(baseline.series.points[i - 1].timestamp <=
                     baseline.series.points[i].timestamp,
                 "trend points are not sorted by timestamp");
  }
  std::vector<Quad> quads(data.quads().begin(), data.quads().end());
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    util::SplitMix64 rng(seed);
    std::vector<Quad> shuffled = quads;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rng.next_below(i)]);
    }
    QuadDataset permuted;
    for (const Quad& q : shuffled) permuted.add(q);
    analytics::TrendResult again = analytics::trend(
        permuted, qm_DereferenceabilityMetric, {kV3, kV2, kV1},
        shipped_tbox());
    check.expect(again.series == baseline.series &&
                     again.skipped == baseline.skipped,
                 "trend output changed under quad permutation");
  }

  // Sixth star: exhaustive over 3 metrics x {absent, met, unmet} x base.
  QuadDataset rated = unioned(
      {make_run(kQ1, kV1, kT1,
                {{qm_RdfAvailabilityMetric, Term::boolean(true)},
                 {qm_DereferenceabilityMetric, Term::double_value(0.6)},
                 {qm_DatatypeConsistencyMetric, Term::double_value(1.0)}})});
  const std::vector<std::pair<std::string, double>> actual{
      {qm_RdfAvailabilityMetric, 1.0},
      {qm_DereferenceabilityMetric, 0.6},
      {qm_DatatypeConsistencyMetric, 1.0}};
  for (int mask = 0; mask < 27; ++mask) {
    std::map<std::string, double> thresholds;
    bool all_met = true;
    int code = mask;
    for (const auto& [metric, value] : actual) {
      int state = code % 3;
      code /= 3;
      if (state == 1) {
        thresholds[metric] = value;
      } else if (state == 2) {
        thresholds[metric] = value + 0.01;
        all_met = false;
      }
    }
    for (int base = 0; base <= 5; ++base) {
      analytics::StarRating rating =
          analytics::six_star(kV1, rated, thresholds, base, shipped_tbox());
      int expected = (base == 5 && all_met) ? 6 : base;
      check.expect(rating.stars == expected,
                   "mask " + std::to_string(mask) + " base " +
                       std::to_string(base) + ": got " +
                       std::to_string(rating.stars) + " stars, expected " +
                       std::to_string(expected));
      check.expect(rating.stars <= base + 1,
                   "mask " + std::to_string(mask) +
                       ": stars exceed base plus one");
    }
  }
}

// ---- criterion 8: chart structure ----

void c8_charts(Checker& check) {
  QuadDataset data = two_by_three();
  for (charts::ChartKind kind :
       {charts::ChartKind::HorizontalBar, charts::ChartKind::VerticalBar,
        charts::ChartKind::Lines, charts::ChartKind::Radar}) {
    std::string kind_name(charts::chart_kind_name(kind));
    charts::ChartSpec spec = charts::chart_spec(data, kind, {kV1, kV2},
                                                kThreeMetrics, shipped_tbox());
    std::size_t present = 0;
    for (const auto& row : spec.values) {
      for (const auto& cell : row) {
        if (cell) ++present;
      }
    }

    std::string svg = charts::render_svg(spec);
    testing::XmlScan scan = testing::scan_xml(svg);
    check.expect(scan.well_formed, kind_name + ": " + scan.error);
    if (!scan.well_formed) continue;
    check.expect(scan.elements.front().name == "svg",
                 kind_name + ": root element is not svg");

    switch (kind) {
      case charts::ChartKind::HorizontalBar:
      case charts::ChartKind::VerticalBar:
        check.expect(
            testing::count_with_class(scan, "g", "cell") == present,
            kind_name + ": cell group count is not one per present value");
        check.expect(testing::count_with_class(scan, "rect", "swatch") == 3,
                     kind_name + ": expected one legend swatch per metric");
        check.expect(testing::count_with_class(scan, "line", "axis") == 2,
                     kind_name + ": expected two axis lines");
        break;
      case charts::ChartKind::Lines:
        check.expect(
            testing::count_with_class(scan, "polyline", "series") == 3,
            kind_name + ": expected one polyline per metric");
        check.expect(testing::count_with_class(scan, "circle", "pt") == 6,
                     kind_name + ": expected one point per present value");
        break;
      case charts::ChartKind::Radar:
        check.expect(
            testing::count_with_class(scan, "polygon", "dataset") == 2,
            kind_name + ": expected one polygon per dataset");
        check.expect(testing::count_with_class(scan, "polygon", "grid") == 1,
                     kind_name + ": expected one grid polygon");
        check.expect(testing::count_with_class(scan, "line", "spoke") == 3,
                     kind_name + ": expected one spoke per metric");
        check.expect(testing::count_with_class(scan, "circle", "pt") == 6,
                     kind_name + ": expected one point per present value");
        break;
    }

    std::string csv = charts::export_csv(spec);
    std::multiset<std::string> from_csv;
    for (const std::string& cell : csv_value_cells(csv)) {
      from_csv.insert(cell);
    }
    std::multiset<std::string> from_svg;
    for (const std::string& value : testing::data_values(scan)) {
      from_svg.insert(value);
    }
    check.expect(from_csv == from_svg,
                 kind_name + ": CSV and SVG value multisets disagree");

    check.expect(charts::render_svg(spec) == svg,
                 kind_name + ": SVG is not byte-stable");
    check.expect(charts::export_csv(spec) == csv,
                 kind_name + ": CSV is not byte-stable");
  }
}

// ---- criterion 9: two-version pipeline through the CLI ----

std::string shell_quote(const std::string& text) {
  std::string quoted = "'";
  for (char c : text) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  quoted += "'";
  return quoted;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) throw AcceptanceError("cannot write " + path.string());
  out << content;
}

struct RunResult {
  int code = -1;
  std::string err;
};

RunResult run_cli(const std::string& cli, const fs::path& dir,
                  const std::vector<std::string>& args) {
  static int counter = 0;
  fs::path err_path = dir / ("stderr" + std::to_string(counter++));
  std::string command = "env -u QUALCUBE_CONFIG " + shell_quote(cli);
  for (const std::string& arg : args) command += " " + shell_quote(arg);
  command += " > /dev/null 2> " + shell_quote(err_path.string());
  int status = std::system(command.c_str());
  RunResult result;
  if (status != -1 && WIFEXITED(status)) result.code = WEXITSTATUS(status);
  result.err = testsupport::read_file(err_path);
  return result;
}

void c9_pipeline(Checker& check) {
  const char* cli = std::getenv("QUALCUBE_CLI");
  if (!cli || !*cli) {
    check.expect(false, "QUALCUBE_CLI is not set");
    return;
  }
  fs::path dir = fs::temp_directory_path() /
                 ("qualcube_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const std::string common =
      "@prefix ex: <http://example.org/> .\n"
      "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      "ex:alice rdfs:label \"Alice\" .\n"
      "ex:alice ex:age \"30\"^^xsd:integer .\n"
      "ex:alice ex:knows <http://other.example/bob> .\n";
  write_file(dir / "v1.ttl", common);
  write_file(dir / "v2.ttl",
             common + "ex:bob ex:age \"thirty\"^^xsd:integer .\n");

  const std::string graph = "http://example.org/quality/history";
  const std::string merged = (dir / "history.trig").string();

  RunResult first =
      run_cli(cli, dir,
              {"assess", "--input", (dir / "v1.ttl").string(),
               "--computed-on", kV1, "--graph-iri", graph, "--clock", kT1,
               "--output", merged});
  check.expect(first.code == 0, "first assess exited " +
                                    std::to_string(first.code) + ": " +
                                    first.err);

  RunResult second =
      run_cli(cli, dir,
              {"assess", "--input", (dir / "v2.ttl").string(),
               "--computed-on", kV2, "--graph-iri", graph, "--clock", kT2,
               "--append", merged, "--output", merged});
  check.expect(second.code == 0, "second assess exited " +
                                     std::to_string(second.code) + ": " +
                                     second.err);

  RunResult validated = run_cli(
      cli, dir, {"validate", "--input", merged, "--graph-iri", graph});
  check.expect(validated.code == 0, "validate exited " +
                                        std::to_string(validated.code) +
                                        ": " + validated.err);

  fs::path plot = dir / "history.svg";
  RunResult charted = run_cli(cli, dir,
                              {"chart", "--input", merged, "--kind", "lines",
                               "--output", plot.string()});
  check.expect(charted.code == 0, "chart exited " +
                                      std::to_string(charted.code) + ": " +
                                      charted.err);

  if (first.code == 0 && second.code == 0 && validated.code == 0 &&
      charted.code == 0) {
    testing::XmlScan scan = testing::scan_xml(testsupport::read_file(plot));
    check.expect(scan.well_formed, "plot is not well-formed: " + scan.error);
    if (scan.well_formed) {
      check.expect(testing::count_with_class(scan, "polyline", "series") == 3,
                   "expected one polyline per assessed metric");
      check.expect(testing::count_with_class(scan, "circle", "pt") == 6,
                   "expected one point per metric per version");
      for (const testing::XmlElement& element : scan.elements) {
        if (element.name != "polyline") continue;
        auto points = element.attributes.find("points");
        check.expect(points != element.attributes.end() &&
                         parse_points(points->second).size() == 2,
                     "each polyline must span both versions");
      }
    }
  }

  std::error_code ec;
  fs::remove_all(dir, ec);
}

// ---- runner ----

struct Criterion {
  std::string label;
  std::function<void(Checker&)> run;
  std::optional<std::chrono::milliseconds> budget;
};

}  // namespace

int main() {
  using std::chrono::duration_cast;
  using std::chrono::milliseconds;
  using std::chrono::steady_clock;

  const std::vector<Criterion> criteria = {
      {"corpus documents round-trip and canonical N-Quads is idempotent",
       c1_round_trip, milliseconds(5000)},
      {"randomized assess runs build quality graphs that validate cleanly",
       c2_constructive, milliseconds(10000)},
      {"each validation code is caught by its targeted mutation",
       c3_mutations, std::nullopt},
      {"grouping agrees with a matrix reachability oracle", c4_grouping,
       milliseconds(10000)},
      {"shipped metrics match independent recounts and stay within [0,1]",
       c5_metric_oracle, std::nullopt},
      {"probe metrics behave correctly against a mock HTTP server",
       c6_probes, std::nullopt},
      {"rank, trend and star analytics hold their invariants", c7_analytics,
       std::nullopt},
      {"all four chart kinds render countable, byte-stable output",
       c8_charts, std::nullopt},
      {"a two-version history assembles end to end through the CLI",
       c9_pipeline, milliseconds(15000)},
  };

  bool all_passed = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker check;
    auto start = steady_clock::now();
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("unexpected exception: ") + e.what());
    }
    auto elapsed = duration_cast<milliseconds>(steady_clock::now() - start);
    if (criteria[i].budget && elapsed > *criteria[i].budget) {
      check.expect(false, "over the " +
                              std::to_string(criteria[i].budget->count()) +
                              " ms budget: took " +
                              std::to_string(elapsed.count()) + " ms");
    }
    bool passed = check.failed == 0;
    all_passed = all_passed && passed;
    std::cout << (passed ? "PASS" : "FAIL") << " " << (i + 1) << "/"
              << criteria.size() << " " << criteria[i].label << " ("
              << elapsed.count() << " ms)\n";
    for (const std::string& note : check.notes) {
      std::cout << "       - " << note << "\n";
    }
    if (check.failed > check.notes.size()) {
      std::cout << "       - and "
                << (check.failed - check.notes.size())
                << " further failed checks\n";
    }
  }
  std::cout << (all_passed ? "acceptance: all criteria passed"
                           : "acceptance: FAILED")
            << std::endl;
  return all_passed ? 0 : 1;
}
