#include "qualcube/quality_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "qualcube/iri.hpp"
#include "qualcube/util.hpp"
#include "qualcube/vocab.hpp"

namespace qualcube::quality {

using rdf::Quad;
using rdf::QuadDataset;
using rdf::Term;
namespace v = qualcube::vocab;

namespace {

std::string observation_iri(const std::string& graph_iri,
                            const std::string& metric_class,
                            const std::string& computed_on,
                            const std::string& timestamp) {
  return graph_iri + "/obs/" +
         util::fnv1a64_hex(metric_class + "\n" + computed_on + "\n" +
                           timestamp);
}

// graph_iri + "/instance/" + local name, with a digest suffix when two
// distinct classes share a local name.
class InstanceMinter {
 public:
  explicit InstanceMinter(std::string graph_iri)
      : graph_iri_(std::move(graph_iri)) {}

  const std::string& instance_for(const std::string& class_iri) {
    auto it = by_class_.find(class_iri);
    if (it != by_class_.end()) return it->second;
    std::string candidate =
        graph_iri_ + "/instance/" + iri::local_name(class_iri);
    if (!claimed_.insert(candidate).second) {
      candidate += "-" + util::fnv1a64_hex(class_iri).substr(0, 8);
      claimed_.insert(candidate);
    }
    return by_class_.emplace(class_iri, std::move(candidate)).first->second;
  }

 private:
  std::string graph_iri_;
  std::map<std::string, std::string> by_class_;
  std::set<std::string> claimed_;
};

}  // namespace

Result<QuadDataset, std::string> build_quality_graph(
    const std::vector<metrics::MetricOutcome>& results,
    const std::string& computed_on, const std::string& timestamp,
    const std::string& graph_iri) {
  if (!iri::is_absolute(graph_iri)) {
    return std::string("graph IRI must be absolute: " + graph_iri);
  }
  if (!iri::is_absolute(computed_on)) {
    return std::string("computedOn must be an absolute IRI: " + computed_on);
  }
  if (!util::parse_iso8601(timestamp)) {
    return std::string("timestamp is not an ISO-8601 instant: " + timestamp);
  }

  std::set<std::string> seen_metric_classes;
  for (const metrics::MetricOutcome& outcome : results) {
    if (!outcome.result) continue;
    if (!seen_metric_classes.insert(outcome.descriptor.metric_class).second) {
      return std::string("duplicate metric class in one run: " +
                         outcome.descriptor.metric_class);
    }
  }

  QuadDataset out;
  out.add_prefix("daq", v::kDaq);
  out.add_prefix("qb", v::kQb);
  out.add_prefix("dc", v::kDcTerms);
  out.add_prefix("sdmx-attribute", v::kSdmxAttribute);
  out.add_prefix("xsd", v::kXsd);

  const Term graph = Term::iri(graph_iri);
  const Term type = Term::iri(v::rdf_type);
  auto emit = [&](Term s, Term p, Term o) {
    out.add(Quad(std::move(s), std::move(p), std::move(o), graph));
  };

  emit(graph, type, Term::iri(v::daq_QualityGraph));
  emit(graph, type, Term::iri(v::qb_DataSet));
  emit(graph, Term::iri(v::qb_structure), Term::iri(v::daq_dsd));

  InstanceMinter minter(graph_iri);
  for (const metrics::MetricOutcome& outcome : results) {
    if (!outcome.result) continue;
    const daq::MetricDescriptor& d = outcome.descriptor;
    const metrics::MetricResult& r = *outcome.result;

    const Term category = Term::iri(minter.instance_for(d.category_class));
    const Term dimension = Term::iri(minter.instance_for(d.dimension_class));
    const Term metric = Term::iri(minter.instance_for(d.metric_class));
    emit(category, type, Term::iri(d.category_class));
    emit(dimension, type, Term::iri(d.dimension_class));
    emit(metric, type, Term::iri(d.metric_class));
    emit(category, Term::iri(d.has_dimension_sub_property), dimension);
    emit(dimension, Term::iri(d.has_metric_sub_property), metric);

    const Term obs = Term::iri(
        observation_iri(graph_iri, d.metric_class, computed_on, timestamp));
    emit(obs, type, Term::iri(v::qb_Observation));
    emit(obs, Term::iri(v::daq_metric), metric);
    emit(obs, Term::iri(v::daq_computedOn), Term::iri(computed_on));
    emit(obs, Term::iri(v::daq_value), r.value);
    emit(obs, Term::iri(v::dc_date), Term::date_time(timestamp));
    emit(obs, Term::iri(v::qb_dataSet), graph);
    if (r.unit_measure) {
      emit(obs, Term::iri(v::sdmx_unitMeasure), Term::iri(*r.unit_measure));
    }
    emit(metric, Term::iri(v::daq_hasObservation), obs);
  }
  return out;
}

std::string_view violation_code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::V1: return "V1";
    case ViolationCode::V2: return "V2";
    case ViolationCode::V3: return "V3";
    case ViolationCode::V4: return "V4";
    case ViolationCode::V5: return "V5";
    case ViolationCode::V6: return "V6";
    case ViolationCode::V7: return "V7";
  }
  return "V?";
}

namespace {

// Index of one named graph: subject -> predicate -> objects.
struct GraphIndex {
  std::map<Term, std::map<std::string, std::vector<Term>>> spo;
  QuadDataset as_dataset;

  explicit GraphIndex(const std::set<Quad>& quads) {
    for (const Quad& q : quads) {
      spo[q.subject][q.predicate.value()].push_back(q.object);
      as_dataset.add(q);
    }
  }

  const std::vector<Term>* objects(const Term& subject,
                                   const std::string& predicate) const {
    auto s = spo.find(subject);
    if (s == spo.end()) return nullptr;
    auto p = s->second.find(predicate);
    if (p == s->second.end()) return nullptr;
    return &p->second;
  }

  std::size_t count(const Term& subject, const std::string& predicate) const {
    const std::vector<Term>* found = objects(subject, predicate);
    return found ? found->size() : 0;
  }
};

// Most specific class asserted for `instance` among subclasses of
// daq:Metric; empty when none resolves.
std::string metric_class_of(const GraphIndex& g, const Term& instance,
                            const daq::TBox& t) {
  const std::vector<Term>* types = g.objects(instance, v::rdf_type);
  if (!types) return "";
  std::set<std::string> candidates;
  for (const Term& cls : *types) {
    if (cls.is_iri() && t.is_subclass(cls.value(), v::daq_Metric)) {
      candidates.insert(cls.value());
    }
  }
  std::string best;
  for (const std::string& c : candidates) {
    bool minimal = true;
    for (const std::string& other : candidates) {
      if (other != c && t.is_subclass(other, c)) {
        minimal = false;
        break;
      }
    }
    if (minimal && (best.empty() || c < best)) best = c;
  }
  return best;
}

}  // namespace

ValidationReport validate(const QuadDataset& data,
                          const std::string& graph_iri, const daq::TBox& t) {
  ValidationReport report;
  auto add = [&](ViolationCode code, const std::string& subject,
                 std::string message) {
    report.violations.push_back({code, subject, std::move(message)});
  };

  const Term graph = Term::iri(graph_iri);
  GraphIndex g(data.graph_view(graph));

  // V1: the graph node is typed daq:QualityGraph (directly or through a
  // subclass the TBox knows).
  std::set<std::string> quality_graphs =
      daq::instances_of(g.as_dataset, v::daq_QualityGraph, t);
  if (!quality_graphs.count(graph_iri)) {
    add(ViolationCode::V1, graph_iri,
        "graph is not typed daq:QualityGraph");
  }

  // V2: exactly one qb:structure statement, pointing at daq:dsd.
  const std::vector<Term>* structures = g.objects(graph, v::qb_structure);
  std::size_t structure_count = structures ? structures->size() : 0;
  if (structure_count != 1) {
    add(ViolationCode::V2, graph_iri,
        "graph has " + std::to_string(structure_count) +
            " qb:structure statements (expected exactly 1)");
  } else if (!((*structures)[0] == Term::iri(v::daq_dsd))) {
    add(ViolationCode::V2, graph_iri,
        "qb:structure points at " + (*structures)[0].value() +
            " (expected daq:dsd)");
  }

  std::set<std::string> observations =
      daq::instances_of(g.as_dataset, v::qb_Observation, t);

  for (const std::string& obs_iri : observations) {
    const Term obs = Term::iri(obs_iri);

    // V3: exactly-one cardinality for the required components.
    bool have_metric = false, have_value = false;
    for (const char* predicate :
         {v::daq_metric.c_str(), v::daq_computedOn.c_str(),
          v::daq_value.c_str(), v::dc_date.c_str()}) {
      std::size_t n = g.count(obs, predicate);
      if (n != 1) {
        add(ViolationCode::V3, obs_iri,
            "observation has " + std::to_string(n) + " " +
                std::string(predicate) + " statements (expected exactly 1)");
      } else {
        if (predicate == v::daq_metric) have_metric = true;
        if (predicate == v::daq_value) have_value = true;
      }
    }
    std::size_t dataset_count = g.count(obs, v::qb_dataSet);
    if (dataset_count != 1) {
      add(ViolationCode::V3, obs_iri,
          "observation has " + std::to_string(dataset_count) +
              " qb:dataSet statements (expected exactly 1)");
    } else if (!((*g.objects(obs, v::qb_dataSet))[0] == graph)) {
      add(ViolationCode::V3, obs_iri,
          "qb:dataSet points at " +
              (*g.objects(obs, v::qb_dataSet))[0].value() +
              " (expected the quality graph " + graph_iri + ")");
    }

    // V4/V5 need the single daq:metric target.
    if (!have_metric) continue;
    const Term metric_instance = (*g.objects(obs, v::daq_metric))[0];

    // V5: the metric instance must be an instance of a daq:Metric subclass.
    std::string metric_class = metric_class_of(g, metric_instance, t);
    if (metric_class.empty()) {
      add(ViolationCode::V5, metric_instance.value(),
          "daq:metric target of " + obs_iri +
              " is not an instance of a subclass of daq:Metric");
    }

    // V4: value datatype equals the class's declared expectedDataType.
    if (have_value && !metric_class.empty()) {
      auto expected = t.expected_datatypes.find(metric_class);
      if (expected != t.expected_datatypes.end() &&
          expected->second.size() == 1) {
        const Term& value = (*g.objects(obs, v::daq_value))[0];
        const std::string& want = *expected->second.begin();
        if (!value.is_literal()) {
          add(ViolationCode::V4, obs_iri,
              "daq:value is not a literal (expected datatype " + want + ")");
        } else if (value.datatype() != want) {
          add(ViolationCode::V4, obs_iri,
              "daq:value has datatype " + value.datatype() + " (expected " +
                  want + " for " + metric_class + ")");
        }
      }
    }
  }

  // V6: daq:hasObservation and daq:metric are mutually inverse. The
  // hasObservation direction stays quiet when the observation's missing
  // daq:metric was already reported under V3.
  for (const auto& [subject, predicates] : g.spo) {
    if (auto it = predicates.find(v::daq_hasObservation);
        it != predicates.end()) {
      for (const Term& obs : it->second) {
        const std::vector<Term>* back = g.objects(obs, v::daq_metric);
        bool matched =
            back && std::count(back->begin(), back->end(), subject) > 0;
        if (matched) continue;
        bool v3_covered = observations.count(obs.value()) &&
                          (!back || back->empty());
        if (!v3_covered) {
          add(ViolationCode::V6, subject.value(),
              "daq:hasObservation of " + obs.value() +
                  " has no inverse daq:metric");
        }
      }
    }
    if (auto it = predicates.find(v::daq_metric); it != predicates.end()) {
      for (const Term& metric : it->second) {
        const std::vector<Term>* forward =
            g.objects(metric, v::daq_hasObservation);
        bool matched = forward &&
                       std::count(forward->begin(), forward->end(), subject) >
                           0;
        if (!matched) {
          add(ViolationCode::V6, subject.value(),
              "daq:metric pointing at " + metric.value() +
                  " has no inverse daq:hasObservation");
        }
      }
    }
  }

  // V7: every metric instance is reachable from a category instance via
  // hasDimension/hasMetric sub-property chains.
  std::set<std::string> reachable;
  for (const std::string& category :
       daq::instances_of(g.as_dataset, v::daq_Category, t)) {
    auto cat_preds = g.spo.find(Term::iri(category));
    if (cat_preds == g.spo.end()) continue;
    for (const auto& [predicate, dimensions] : cat_preds->second) {
      if (!t.is_subproperty(predicate, v::daq_hasDimension)) continue;
      for (const Term& dimension : dimensions) {
        auto dim_preds = g.spo.find(dimension);
        if (dim_preds == g.spo.end()) continue;
        for (const auto& [metric_predicate, metric_objs] :
             dim_preds->second) {
          if (!t.is_subproperty(metric_predicate, v::daq_hasMetric)) continue;
          for (const Term& metric : metric_objs) {
            if (metric.is_iri()) reachable.insert(metric.value());
          }
        }
      }
    }
  }
  for (const std::string& metric :
       daq::instances_of(g.as_dataset, v::daq_Metric, t)) {
    if (!reachable.count(metric)) {
      add(ViolationCode::V7, metric,
          "metric instance is not reachable from any category instance");
    }
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.code, a.subject, a.message) <
                     std::tie(b.code, b.subject, b.message);
            });
  return report;
}

std::string report_lines(const ValidationReport& report) {
  std::string out;
  for (const Violation& violation : report.violations) {
    out += violation_code_name(violation.code);
    out += '\t';
    out += violation.subject;
    out += '\t';
    out += violation.message;
    out += '\n';
  }
  return out;
}

std::string report_json(const ValidationReport& report) {
  nlohmann::json doc;
  doc["passed"] = report.passed();
  doc["violations"] = nlohmann::json::array();
  for (const Violation& violation : report.violations) {
    doc["violations"].push_back(
        {{"code", std::string(violation_code_name(violation.code))},
         {"subject", violation.subject},
         {"message", violation.message}});
  }
  return doc.dump(2) + "\n";
}

std::vector<Observation> extract_observations(const QuadDataset& data,
                                              const std::string& graph_iri,
                                              const daq::TBox& t) {
  const Term graph = Term::iri(graph_iri);
  GraphIndex g(data.graph_view(graph));

  std::vector<Observation> out;
  for (const std::string& obs_iri :
       daq::instances_of(g.as_dataset, v::qb_Observation, t)) {
    const Term obs = Term::iri(obs_iri);
    if (g.count(obs, v::daq_metric) != 1 ||
        g.count(obs, v::daq_computedOn) != 1 ||
        g.count(obs, v::daq_value) != 1 || g.count(obs, v::dc_date) != 1) {
      continue;
    }
    const Term& metric = (*g.objects(obs, v::daq_metric))[0];
    const Term& computed_on = (*g.objects(obs, v::daq_computedOn))[0];
    if (!metric.is_iri() || !computed_on.is_iri()) continue;

    Observation observation{obs_iri,
                            metric.value(),
                            metric_class_of(g, metric, t),
                            computed_on.value(),
                            (*g.objects(obs, v::daq_value))[0],
                            (*g.objects(obs, v::dc_date))[0].value(),
                            std::nullopt,
                            graph_iri};
    if (const std::vector<Term>* units =
            g.objects(obs, v::sdmx_unitMeasure);
        units && units->size() == 1 && (*units)[0].is_iri()) {
      observation.unit_measure = (*units)[0].value();
    }
    out.push_back(std::move(observation));
  }
  std::sort(out.begin(), out.end(),
            [](const Observation& a, const Observation& b) {
              return a.iri < b.iri;
            });
  return out;
}

Result<QuadDataset, std::string> merge_runs(const QuadDataset& existing,
                                            const QuadDataset& addition,
                                            const std::string& graph_iri) {
  const Term graph = Term::iri(graph_iri);
  GraphIndex old_graph(existing.graph_view(graph));
  GraphIndex new_graph(addition.graph_view(graph));

  // Observation IRIs present on both sides must carry identical statements.
  std::set<std::string> old_observations, new_observations;
  for (const Quad& q : old_graph.as_dataset.quads()) {
    if (q.predicate.value() == v::rdf_type &&
        q.object == Term::iri(v::qb_Observation)) {
      old_observations.insert(q.subject.value());
    }
  }
  for (const Quad& q : new_graph.as_dataset.quads()) {
    if (q.predicate.value() == v::rdf_type &&
        q.object == Term::iri(v::qb_Observation)) {
      new_observations.insert(q.subject.value());
    }
  }
  for (const std::string& obs_iri : new_observations) {
    if (!old_observations.count(obs_iri)) continue;
    const Term obs = Term::iri(obs_iri);
    auto old_statements = old_graph.spo.find(obs);
    auto new_statements = new_graph.spo.find(obs);
    bool same = old_statements != old_graph.spo.end() &&
                new_statements != new_graph.spo.end() &&
                old_statements->second == new_statements->second;
    if (!same) {
      return std::string(
          "observation IRI collision with differing content: " + obs_iri);
    }
  }

  QuadDataset merged;
  merged.merge_prefixes(existing);
  merged.merge_prefixes(addition);
  for (const Quad& q : existing.quads()) merged.add(q);
  for (const Quad& q : addition.quads()) merged.add(q);
  return merged;
}

}  // namespace qualcube::quality
