#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qualcube/dataset.hpp"
#include "qualcube/metrics.hpp"
#include "qualcube/result.hpp"
#include "qualcube/tbox.hpp"

namespace qualcube::quality {

// One qb:Observation read back out of a quality graph. metric_class is the
// most specific class asserted for the metric instance (empty when the
// instance carries no metric class the TBox knows).
struct Observation {
  std::string iri;
  std::string metric_instance;
  std::string metric_class;
  std::string computed_on;
  rdf::Term value;
  std::string timestamp;  // dc:date lexical form, ISO-8601
  std::optional<std::string> unit_measure;
  std::string in_quality_graph;

  bool operator==(const Observation&) const = default;
};

// Emits the quality graph for one assessment run into named graph
// graph_iri: graph typing plus qb:structure, one instance per distinct
// category/dimension/metric class (instance IRIs are graph_iri +
// "/instance/" + the class local name; a digest suffix disambiguates the
// rare local-name clash), and one observation per successful result
// (graph_iri + "/obs/" + digest of metric class, computedOn and
// timestamp). Errored outcomes are skipped. Errors: duplicate metric
// class among results, invalid IRIs, unparseable timestamp.
Result<rdf::QuadDataset, std::string> build_quality_graph(
    const std::vector<metrics::MetricOutcome>& results,
    const std::string& computed_on, const std::string& timestamp,
    const std::string& graph_iri);

enum class ViolationCode { V1, V2, V3, V4, V5, V6, V7 };

std::string_view violation_code_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string subject;
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;  // sorted by code, subject, message
  bool passed() const { return violations.empty(); }
};

// Checks the named graph graph_iri of data against the fixed structure:
//   V1 graph typed daq:QualityGraph
//   V2 exactly one qb:structure statement, object daq:dsd
//   V3 each observation has exactly one daq:metric / daq:computedOn /
//      daq:value / dc:date and one qb:dataSet naming the graph
//   V4 value datatype equals the metric class's daq:expectedDataType
//   V5 each daq:metric object is an instance of a subclass of daq:Metric
//   V6 daq:hasObservation and daq:metric are mutually inverse in the graph
//   V7 every metric instance is reachable from a category instance through
//      hasDimension/hasMetric sub-properties
// t must be closed and contain the loaded extensions.
ValidationReport validate(const rdf::QuadDataset& data,
                          const std::string& graph_iri, const daq::TBox& t);

// One line per violation: CODE<TAB>subject<TAB>message.
std::string report_lines(const ValidationReport& report);

// {"passed": bool, "violations": [{"code","subject","message"}...]}
std::string report_json(const ValidationReport& report);

// Well-formed observations of the named graph, sorted by IRI. Observations
// that fail the V3 uniqueness checks are omitted (validate reports them).
std::vector<Observation> extract_observations(const rdf::QuadDataset& data,
                                              const std::string& graph_iri,
                                              const daq::TBox& t);

// Union of two runs of the same quality graph; never deletes. Errors when
// an observation IRI appears in both with differing statements.
Result<rdf::QuadDataset, std::string> merge_runs(
    const rdf::QuadDataset& existing, const rdf::QuadDataset& addition,
    const std::string& graph_iri);

}  // namespace qualcube::quality
