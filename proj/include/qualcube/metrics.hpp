#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qualcube/dataset.hpp"
#include "qualcube/probe.hpp"
#include "qualcube/tbox.hpp"

namespace qualcube::metrics {

// Metric vocabulary shipped with the toolkit, defined in the extension
// pattern so it loads through the same path as user vocabularies.
inline const std::string kQm = "http://purl.org/qualcube/vocab/qm#";

inline const std::string qm_DatatypeConsistencyMetric =
    kQm + "DatatypeConsistencyMetric";
inline const std::string qm_LabeledResourceMetric =
    kQm + "LabeledResourceMetric";
inline const std::string qm_ExternalLinkageMetric =
    kQm + "ExternalLinkageMetric";
inline const std::string qm_RdfAvailabilityMetric =
    kQm + "RdfAvailabilityMetric";
inline const std::string qm_EndPointAvailabilityMetric =
    kQm + "EndPointAvailabilityMetric";
inline const std::string qm_EndPointLatencyMetric =
    kQm + "EndPointLatencyMetric";
inline const std::string qm_DereferenceabilityMetric =
    kQm + "DereferenceabilityMetric";

// Unit IRI attached to duration-valued observations.
inline const std::string kUnitSeconds = "http://qudt.org/vocab/unit#Seconds";

// Turtle source of the shipped vocabulary (categories, dimensions, the
// seven metric classes and their linking sub-properties).
std::string shipped_extension_turtle();

// The shipped vocabulary loaded against the built-in TBox. Throws
// std::logic_error if the embedded document stops loading cleanly.
const daq::LoadedExtension& shipped_metrics();

// Descriptor lookup by metric class over any descriptor list.
const daq::MetricDescriptor* find_descriptor(
    const std::vector<daq::MetricDescriptor>& descriptors,
    const std::string& metric_class);

struct MetricResult {
  std::string metric_class;
  rdf::Term value;  // literal typed per the descriptor's expectedDataType
  std::optional<std::string> unit_measure;
  std::optional<std::string> detail;
};

// Exactly one outcome per selected metric: a result or a per-metric error.
struct MetricOutcome {
  daq::MetricDescriptor descriptor;
  std::optional<MetricResult> result;
  std::optional<std::string> error;
};

struct AssessmentJob {
  rdf::QuadDataset target;  // ignored by assess_stream
  std::string computed_on;  // absolute IRI of the assessed resource
  std::vector<daq::MetricDescriptor> selected;
  std::string timestamp;  // ISO-8601 UTC instant, injected by the caller
  probe::ProbeSettings probes;
};

// Pull-based quad stream; returns nullopt at end of input.
using QuadSource = std::function<std::optional<rdf::Quad>()>;

// Runs every selected metric over one traversal of the quad stream, then
// finalizes (issuing network probes in parallel where needed). Throws
// std::invalid_argument when the job violates its invariants; individual
// metric failures land in MetricOutcome::error.
std::vector<MetricOutcome> assess_stream(QuadSource source,
                                         const AssessmentJob& job);

// Same, streaming job.target.
std::vector<MetricOutcome> assess(const AssessmentJob& job);

}  // namespace qualcube::metrics
