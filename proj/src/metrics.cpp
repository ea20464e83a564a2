#include "qualcube/metrics.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

#include "qualcube/iri.hpp"
#include "qualcube/parse.hpp"
#include "qualcube/util.hpp"
#include "qualcube/vocab.hpp"
#include "qualcube/xsd.hpp"

namespace qualcube::metrics {

using rdf::Quad;
using rdf::Term;
namespace v = qualcube::vocab;

std::string shipped_extension_turtle() {
  return R"(@prefix daq: <http://purl.org/eis/vocab/daq#> .
@prefix qm: <http://purl.org/qualcube/vocab/qm#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix sdmx-attribute: <http://purl.org/linked-data/sdmx/2009/attribute#> .
@prefix unit: <http://qudt.org/vocab/unit#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .

qm:Intrinsic rdfs:subClassOf daq:Category ; rdfs:label "Intrinsic quality" .
qm:Representational rdfs:subClassOf daq:Category ;
    rdfs:label "Representational quality" .
qm:Accessibility rdfs:subClassOf daq:Category ; rdfs:label "Accessibility" .

qm:Consistency rdfs:subClassOf daq:Dimension ; rdfs:label "Consistency" .
qm:Understandability rdfs:subClassOf daq:Dimension ;
    rdfs:label "Understandability" .
qm:Availability rdfs:subClassOf daq:Dimension ; rdfs:label "Availability" .
qm:Performance rdfs:subClassOf daq:Dimension ; rdfs:label "Performance" .
qm:Interlinking rdfs:subClassOf daq:Dimension ; rdfs:label "Interlinking" .

qm:hasConsistencyDimension rdfs:subPropertyOf daq:hasDimension ;
    rdfs:domain qm:Intrinsic ; rdfs:range qm:Consistency .
qm:hasUnderstandabilityDimension rdfs:subPropertyOf daq:hasDimension ;
    rdfs:domain qm:Representational ; rdfs:range qm:Understandability .
qm:hasAvailabilityDimension rdfs:subPropertyOf daq:hasDimension ;
    rdfs:domain qm:Accessibility ; rdfs:range qm:Availability .
qm:hasPerformanceDimension rdfs:subPropertyOf daq:hasDimension ;
    rdfs:domain qm:Accessibility ; rdfs:range qm:Performance .
qm:hasInterlinkingDimension rdfs:subPropertyOf daq:hasDimension ;
    rdfs:domain qm:Accessibility ; rdfs:range qm:Interlinking .

qm:DatatypeConsistencyMetric rdfs:subClassOf daq:Metric ;
    daq:expectedDataType xsd:double ;
    rdfs:label "Datatype consistency" .
qm:hasDatatypeConsistencyMetric rdfs:subPropertyOf daq:hasMetric ;
    rdfs:domain qm:Consistency ; rdfs:range qm:DatatypeConsistencyMetric .

qm:LabeledResourceMetric rdfs:subClassOf daq:Metric ;
    daq:expectedDataType xsd:double ;
    rdfs:label "Labeled resources" .
qm:hasLabeledResourceMetric rdfs:subPropertyOf daq:hasMetric ;
    rdfs:domain qm:Understandability ; rdfs:range qm:LabeledResourceMetric .

qm:ExternalLinkageMetric rdfs:subClassOf daq:Metric ;
    daq:expectedDataType xsd:double ;
    rdfs:label "External linkage" .
qm:hasExternalLinkageMetric rdfs:subPropertyOf daq:hasMetric ;
    rdfs:domain qm:Interlinking ; rdfs:range qm:ExternalLinkageMetric .

qm:RdfAvailabilityMetric rdfs:subClassOf daq:Metric ;
    daq:expectedDataType xsd:boolean ;
    rdfs:label "RDF availability" .
qm:hasRdfAvailabilityMetric rdfs:subPropertyOf daq:hasMetric ;
    rdfs:domain qm:Availability ; rdfs:range qm:RdfAvailabilityMetric .

qm:EndPointAvailabilityMetric rdfs:subClassOf daq:Metric ;
    daq:expectedDataType xsd:boolean ;
    rdfs:label "Endpoint availability" .
qm:hasEndPointAvailabilityMetric rdfs:subPropertyOf daq:hasMetric ;
    rdfs:domain qm:Availability ; rdfs:range qm:EndPointAvailabilityMetric .

qm:EndPointLatencyMetric rdfs:subClassOf daq:Metric ;
    daq:expectedDataType xsd:double ;
    sdmx-attribute:unitMeasure unit:Seconds ;
    rdfs:label "Endpoint latency" .
qm:hasEndPointLatencyMetric rdfs:subPropertyOf daq:hasMetric ;
    rdfs:domain qm:Performance ; rdfs:range qm:EndPointLatencyMetric .

qm:DereferenceabilityMetric rdfs:subClassOf daq:Metric ;
    daq:expectedDataType xsd:double ;
    rdfs:label "Dereferenceability" .
qm:hasDereferenceabilityMetric rdfs:subPropertyOf daq:hasMetric ;
    rdfs:domain qm:Availability ; rdfs:range qm:DereferenceabilityMetric .
)";
}

const daq::LoadedExtension& shipped_metrics() {
  static const daq::LoadedExtension loaded = [] {
    auto parsed =
        rdf::parse_document(shipped_extension_turtle(), rdf::Format::Turtle);
    if (!parsed.ok()) {
      throw std::logic_error("shipped metric vocabulary does not parse: " +
                             parsed.error().message);
    }
    auto ext = daq::load_extension(parsed.value(), daq::builtin_daq_tbox());
    if (!ext.ok()) {
      std::string defects;
      for (const std::string& d : ext.error().defects) defects += "; " + d;
      throw std::logic_error("shipped metric vocabulary does not load" +
                             defects);
    }
    return std::move(ext.value());
  }();
  return loaded;
}

const daq::MetricDescriptor* find_descriptor(
    const std::vector<daq::MetricDescriptor>& descriptors,
    const std::string& metric_class) {
  for (const daq::MetricDescriptor& d : descriptors) {
    if (d.metric_class == metric_class) return &d;
  }
  return nullptr;
}

namespace {

using probe::ProbeOutcome;
using probe::ProbeRequest;
using probe::ProbeStatus;

// Lookup from a request issued during the probe phase to its outcome.
using ProbeLookup =
    std::function<const ProbeOutcome&(const ProbeRequest& request)>;

struct Verdict {
  std::optional<MetricResult> result;
  std::optional<std::string> error;
};

MetricResult ratio_result(const daq::MetricDescriptor& d, double value,
                          std::optional<std::string> detail = std::nullopt) {
  return MetricResult{d.metric_class, Term::double_value(value),
                      d.unit_measure, std::move(detail)};
}

MetricResult bool_result(const daq::MetricDescriptor& d, bool value,
                         std::optional<std::string> detail = std::nullopt) {
  return MetricResult{d.metric_class, Term::boolean(value), d.unit_measure,
                      std::move(detail)};
}

struct Accumulator {
  explicit Accumulator(daq::MetricDescriptor descriptor)
      : descriptor(std::move(descriptor)) {}
  virtual ~Accumulator() = default;
  virtual void observe(const Quad&) {}
  virtual std::vector<ProbeRequest> probes(const AssessmentJob&) {
    return {};
  }
  virtual Verdict finalize(const AssessmentJob& job,
                           const ProbeLookup& lookup) = 0;

  daq::MetricDescriptor descriptor;
};

// The six datatypes whose lexical forms the consistency metric verifies.
bool consistency_checkable(const std::string& datatype) {
  return datatype == v::xsd_integer || datatype == v::xsd_decimal ||
         datatype == v::xsd_double || datatype == v::xsd_boolean ||
         datatype == v::xsd_date || datatype == v::xsd_dateTime;
}

struct DatatypeConsistency : Accumulator {
  using Accumulator::Accumulator;
  std::size_t checkable = 0, valid = 0;

  void observe(const Quad& q) override {
    if (!q.object.is_literal()) return;
    const std::string& dt = q.object.datatype();
    if (!consistency_checkable(dt)) return;
    ++checkable;
    if (xsd::lexical_valid(q.object.value(), dt)) ++valid;
  }
  Verdict finalize(const AssessmentJob&, const ProbeLookup&) override {
    if (checkable == 0) {
      return {ratio_result(descriptor, 1.0, "no checkable literals"),
              std::nullopt};
    }
    return {ratio_result(descriptor,
                         static_cast<double>(valid) /
                             static_cast<double>(checkable)),
            std::nullopt};
  }
};

struct LabeledResource : Accumulator {
  using Accumulator::Accumulator;
  std::set<std::string> subjects, labeled;

  void observe(const Quad& q) override {
    if (!q.subject.is_iri()) return;
    subjects.insert(q.subject.value());
    if (q.predicate.value() == v::rdfs_label && q.object.is_literal()) {
      labeled.insert(q.subject.value());
    }
  }
  Verdict finalize(const AssessmentJob&, const ProbeLookup&) override {
    if (subjects.empty()) {
      return {ratio_result(descriptor, 1.0, "no subject IRIs"), std::nullopt};
    }
    return {ratio_result(descriptor,
                         static_cast<double>(labeled.size()) /
                             static_cast<double>(subjects.size())),
            std::nullopt};
  }
};

struct ExternalLinkage : Accumulator {
  using Accumulator::Accumulator;
  std::set<std::string> object_iris;

  void observe(const Quad& q) override {
    if (q.object.is_iri()) object_iris.insert(q.object.value());
  }
  Verdict finalize(const AssessmentJob& job, const ProbeLookup&) override {
    if (object_iris.empty()) {
      return {ratio_result(descriptor, 0.0, "no object IRIs"), std::nullopt};
    }
    const std::string home = iri::authority_of(job.computed_on);
    std::size_t external = 0;
    for (const std::string& o : object_iris) {
      if (iri::authority_of(o) != home) ++external;
    }
    return {ratio_result(descriptor,
                         static_cast<double>(external) /
                             static_cast<double>(object_iris.size())),
            std::nullopt};
  }
};

// Shared by RDF availability and dereferenceability: a body counts as RDF
// when it parses under the negotiated (or assumed Turtle) format.
bool parses_as_rdf(const ProbeOutcome& outcome, std::string* why) {
  rdf::Format format = rdf::Format::Turtle;
  if (outcome.media_type) {
    auto mapped = rdf::format_from_media_type(*outcome.media_type);
    if (!mapped) {
      *why = "unsupported media type: " + *outcome.media_type;
      return false;
    }
    format = *mapped;
  }
  auto parsed = rdf::parse_document(outcome.body, format);
  if (!parsed.ok()) {
    *why = "body is not parseable RDF";
    return false;
  }
  return true;
}

std::string failure_note(const ProbeOutcome& outcome) {
  return outcome.detail.empty()
             ? std::string(probe::probe_status_name(outcome.status))
             : outcome.detail;
}

struct RdfAvailability : Accumulator {
  using Accumulator::Accumulator;

  std::vector<ProbeRequest> probes(const AssessmentJob& job) override {
    return {{job.computed_on, probe::kRdfAcceptHeader}};
  }
  Verdict finalize(const AssessmentJob& job,
                   const ProbeLookup& lookup) override {
    const ProbeOutcome& outcome =
        lookup({job.computed_on, probe::kRdfAcceptHeader});
    if (outcome.status != ProbeStatus::Ok) {
      return {bool_result(descriptor, false, failure_note(outcome)),
              std::nullopt};
    }
    std::string why;
    if (!parses_as_rdf(outcome, &why)) {
      return {bool_result(descriptor, false, why), std::nullopt};
    }
    std::string note = "HTTP " + std::to_string(outcome.http_status);
    if (outcome.media_type) note += ", " + *outcome.media_type;
    return {bool_result(descriptor, true, note), std::nullopt};
  }
};

std::string ask_url(const std::string& endpoint) {
  std::string url = endpoint;
  url += (url.find('?') == std::string::npos) ? '?' : '&';
  url += "query=ASK%20%7B%7D";
  return url;
}

struct EndpointAvailability : Accumulator {
  using Accumulator::Accumulator;

  std::vector<ProbeRequest> probes(const AssessmentJob& job) override {
    if (!job.probes.endpoint_url) return {};
    return {{ask_url(*job.probes.endpoint_url), "*/*"}};
  }
  Verdict finalize(const AssessmentJob& job,
                   const ProbeLookup& lookup) override {
    if (!job.probes.endpoint_url) {
      return {std::nullopt, "no endpoint URL configured"};
    }
    const ProbeOutcome& outcome =
        lookup({ask_url(*job.probes.endpoint_url), "*/*"});
    if (outcome.status != ProbeStatus::Ok) {
      return {bool_result(descriptor, false, failure_note(outcome)),
              std::nullopt};
    }
    return {bool_result(descriptor, true,
                        "HTTP " + std::to_string(outcome.http_status)),
            std::nullopt};
  }
};

struct EndpointLatency : Accumulator {
  using Accumulator::Accumulator;

  std::vector<ProbeRequest> probes(const AssessmentJob& job) override {
    if (!job.probes.endpoint_url) return {};
    return {{ask_url(*job.probes.endpoint_url), "*/*"}};
  }
  Verdict finalize(const AssessmentJob& job,
                   const ProbeLookup& lookup) override {
    if (!job.probes.endpoint_url) {
      return {std::nullopt, "no endpoint URL configured"};
    }
    const ProbeOutcome& outcome =
        lookup({ask_url(*job.probes.endpoint_url), "*/*"});
    if (outcome.status != ProbeStatus::Ok || !outcome.latency) {
      return {std::nullopt, "endpoint probe failed: " + failure_note(outcome)};
    }
    double seconds =
        static_cast<double>(outcome.latency->count()) / 1000.0;
    MetricResult r = ratio_result(descriptor, seconds);
    if (!r.unit_measure) r.unit_measure = kUnitSeconds;
    return {std::move(r), std::nullopt};
  }
};

struct Dereferenceability : Accumulator {
  using Accumulator::Accumulator;
  std::set<std::string> local_subjects;
  std::vector<std::string> sampled;

  void observe(const Quad& q) override {
    if (q.subject.is_iri()) local_subjects.insert(q.subject.value());
  }
  std::vector<ProbeRequest> probes(const AssessmentJob& job) override {
    const std::string home = iri::authority_of(job.computed_on);
    std::vector<std::string> candidates;
    for (const std::string& s : local_subjects) {
      if (iri::authority_of(s) == home) candidates.push_back(s);
    }
    std::size_t want = std::max(job.probes.max_sample_size, 1);
    if (candidates.size() > want) {
      util::SplitMix64 rng(job.probes.sample_seed);
      for (std::size_t i = 0; i < want; ++i) {
        std::size_t j =
            i + rng.next_below(candidates.size() - i);
        std::swap(candidates[i], candidates[j]);
      }
      candidates.resize(want);
      std::sort(candidates.begin(), candidates.end());
    }
    sampled = std::move(candidates);
    std::vector<ProbeRequest> requests;
    requests.reserve(sampled.size());
    for (const std::string& s : sampled) {
      requests.push_back({s, probe::kRdfAcceptHeader});
    }
    return requests;
  }
  Verdict finalize(const AssessmentJob& job,
                   const ProbeLookup& lookup) override {
    std::size_t local_total = 0;
    const std::string home = iri::authority_of(job.computed_on);
    for (const std::string& s : local_subjects) {
      if (iri::authority_of(s) == home) ++local_total;
    }
    if (sampled.empty()) {
      return {ratio_result(descriptor, 1.0, "no local subject IRIs"),
              std::nullopt};
    }
    std::size_t dereferenceable = 0;
    for (const std::string& s : sampled) {
      const ProbeOutcome& outcome = lookup({s, probe::kRdfAcceptHeader});
      std::string why;
      if (outcome.status == ProbeStatus::Ok && parses_as_rdf(outcome, &why)) {
        ++dereferenceable;
      }
    }
    std::string note = "sampled " + std::to_string(sampled.size()) + " of " +
                       std::to_string(local_total) + " local subjects (seed " +
                       std::to_string(job.probes.sample_seed) + ")";
    return {ratio_result(descriptor,
                         static_cast<double>(dereferenceable) /
                             static_cast<double>(sampled.size()),
                         note),
            std::nullopt};
  }
};

std::unique_ptr<Accumulator> make_accumulator(
    const daq::MetricDescriptor& d) {
  if (d.metric_class == qm_DatatypeConsistencyMetric) {
    return std::make_unique<DatatypeConsistency>(d);
  }
  if (d.metric_class == qm_LabeledResourceMetric) {
    return std::make_unique<LabeledResource>(d);
  }
  if (d.metric_class == qm_ExternalLinkageMetric) {
    return std::make_unique<ExternalLinkage>(d);
  }
  if (d.metric_class == qm_RdfAvailabilityMetric) {
    return std::make_unique<RdfAvailability>(d);
  }
  if (d.metric_class == qm_EndPointAvailabilityMetric) {
    return std::make_unique<EndpointAvailability>(d);
  }
  if (d.metric_class == qm_EndPointLatencyMetric) {
    return std::make_unique<EndpointLatency>(d);
  }
  if (d.metric_class == qm_DereferenceabilityMetric) {
    return std::make_unique<Dereferenceability>(d);
  }
  return nullptr;
}

void check_job(const AssessmentJob& job) {
  if (!iri::is_absolute(job.computed_on)) {
    throw std::invalid_argument("computedOn must be an absolute IRI: " +
                                job.computed_on);
  }
  if (job.selected.empty()) {
    throw std::invalid_argument("no metrics selected");
  }
  if (!util::parse_iso8601(job.timestamp)) {
    throw std::invalid_argument("timestamp is not an ISO-8601 instant: " +
                                job.timestamp);
  }
  if (job.probes.max_parallel_probes < 1) {
    throw std::invalid_argument("maxParallelProbes must be at least 1");
  }
  if (job.probes.max_sample_size < 1) {
    throw std::invalid_argument("maxSampleSize must be at least 1");
  }
  if (job.probes.connect_timeout.count() <= 0 ||
      job.probes.request_timeout.count() <= 0) {
    throw std::invalid_argument("probe timeouts must be positive");
  }
}

}  // namespace

std::vector<MetricOutcome> assess_stream(QuadSource source,
                                         const AssessmentJob& job) {
  check_job(job);

  std::vector<MetricOutcome> outcomes;
  outcomes.reserve(job.selected.size());
  std::vector<std::unique_ptr<Accumulator>> live;
  for (const daq::MetricDescriptor& d : job.selected) {
    auto acc = make_accumulator(d);
    if (!acc) {
      outcomes.push_back(
          {d, std::nullopt,
           "no implementation registered for metric class " + d.metric_class});
      continue;
    }
    outcomes.push_back({d, std::nullopt, std::nullopt});
    live.push_back(std::move(acc));
  }

  while (auto quad = source()) {
    for (auto& acc : live) acc->observe(*quad);
  }

  // Deduplicated probe phase: identical requests are fetched once.
  std::map<std::pair<std::string, std::string>, std::size_t> request_index;
  std::vector<ProbeRequest> requests;
  for (auto& acc : live) {
    for (ProbeRequest& r : acc->probes(job)) {
      auto key = std::make_pair(r.url, r.accept_header);
      if (request_index.emplace(key, requests.size()).second) {
        requests.push_back(std::move(r));
      }
    }
  }
  std::vector<ProbeOutcome> probe_outcomes =
      probe::probe_all(requests, job.probes);
  ProbeLookup lookup = [&](const ProbeRequest& r) -> const ProbeOutcome& {
    return probe_outcomes.at(
        request_index.at(std::make_pair(r.url, r.accept_header)));
  };

  std::size_t next_live = 0;
  for (MetricOutcome& out : outcomes) {
    if (out.error) continue;
    Verdict verdict = live[next_live++]->finalize(job, lookup);
    out.result = std::move(verdict.result);
    out.error = std::move(verdict.error);
  }
  return outcomes;
}

std::vector<MetricOutcome> assess(const AssessmentJob& job) {
  auto it = job.target.quads().begin();
  auto end = job.target.quads().end();
  return assess_stream(
      [it, end]() mutable -> std::optional<Quad> {
        if (it == end) return std::nullopt;
        return *it++;
      },
      job);
}

}  // namespace qualcube::metrics
