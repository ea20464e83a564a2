#include "qualcube/tbox.hpp"

#include <algorithm>
#include <deque>

#include "qualcube/vocab.hpp"
#include "qualcube/xsd.hpp"

namespace qualcube::daq {

using rdf::Quad;
using rdf::QuadDataset;
using rdf::Term;
namespace v = qualcube::vocab;

TBox builtin_daq_tbox() {
  TBox t;
  t.declared_classes = {
      v::daq_Category,     v::daq_Dimension,
      v::daq_Metric,       v::daq_QualityGraph,
      v::qb_DataSet,       v::qb_Observation,
      v::qb_ObservationGroup, v::rdfg_Graph,
      v::qb_DataStructureDefinition,
  };
  t.declared_properties = {
      v::daq_hasDimension, v::daq_hasMetric, v::daq_hasObservation,
      v::daq_metric,       v::daq_computedOn, v::daq_value,
      v::daq_expectedDataType, v::daq_requires, v::sdmx_unitMeasure,
      v::dc_date,          v::qb_observation, v::qb_dataSet,
      v::qb_structure,
  };
  t.sub_class_of = {
      {v::daq_QualityGraph, v::qb_DataSet},
      {v::daq_QualityGraph, v::rdfg_Graph},
  };
  t.class_assertions = {
      {v::daq_metric, v::qb_DimensionProperty},
      {v::daq_computedOn, v::qb_DimensionProperty},
      {v::daq_value, v::qb_MeasureProperty},
      {v::sdmx_unitMeasure, v::qb_AttributeProperty},
      {v::dc_date, v::qb_AttributeProperty},
  };
  t.inverse_of = {
      {v::daq_hasObservation, v::daq_metric},
  };
  return closure(std::move(t));
}

std::set<Quad> dsd_definition() {
  std::set<Quad> out;
  const Term dsd = Term::iri(v::daq_dsd);
  const Term component = Term::iri(v::qb_component);
  out.insert(Quad(dsd, Term::iri(v::rdf_type),
                  Term::iri(v::qb_DataStructureDefinition)));

  auto add_component = [&](const char* label,
                           std::initializer_list<Quad> quads) {
    out.insert(Quad(dsd, component, Term::blank(label)));
    for (const Quad& q : quads) out.insert(q);
  };
  add_component("c0",
                {Quad(Term::blank("c0"), Term::iri(v::qb_dimension),
                      Term::iri(v::daq_metric)),
                 Quad(Term::blank("c0"), Term::iri(v::qb_order),
                      Term::integer(1))});
  add_component("c1",
                {Quad(Term::blank("c1"), Term::iri(v::qb_dimension),
                      Term::iri(v::daq_computedOn)),
                 Quad(Term::blank("c1"), Term::iri(v::qb_order),
                      Term::integer(2))});
  add_component("c2", {Quad(Term::blank("c2"), Term::iri(v::qb_measure),
                            Term::iri(v::daq_value))});
  add_component("c3",
                {Quad(Term::blank("c3"), Term::iri(v::qb_attribute),
                      Term::iri(v::sdmx_unitMeasure)),
                 Quad(Term::blank("c3"), Term::iri(v::qb_componentRequired),
                      Term::boolean(false))});
  add_component("c4",
                {Quad(Term::blank("c4"), Term::iri(v::qb_attribute),
                      Term::iri(v::dc_date)),
                 Quad(Term::blank("c4"), Term::iri(v::qb_componentRequired),
                      Term::boolean(true))});
  return out;
}

QuadDataset builtin_vocabulary() {
  QuadDataset ds;
  ds.add_prefix("daq", v::kDaq);
  ds.add_prefix("qb", v::kQb);
  ds.add_prefix("sdmx-attribute", v::kSdmxAttribute);
  ds.add_prefix("dc", v::kDcTerms);
  ds.add_prefix("rdfs", v::kRdfs);
  ds.add_prefix("rdfg", v::kRdfg);
  ds.add_prefix("owl", v::kOwl);
  ds.add_prefix("xsd", v::kXsd);

  TBox t = builtin_daq_tbox();
  const Term sub_class = Term::iri(v::rdfs_subClassOf);
  for (const auto& [child, parent] : t.sub_class_of) {
    if (child != parent) {
      ds.add(Quad(Term::iri(child), sub_class, Term::iri(parent)));
    }
  }
  const Term type = Term::iri(v::rdf_type);
  for (const auto& [inst, cls] : t.class_assertions) {
    ds.add(Quad(Term::iri(inst), type, Term::iri(cls)));
  }
  ds.add(Quad(Term::iri(v::daq_hasObservation), Term::iri(v::owl_inverseOf),
              Term::iri(v::daq_metric)));
  for (const Quad& q : dsd_definition()) ds.add(q);
  return ds;
}

namespace {

// Transitive closure via BFS from each node over the edge set.
std::set<TBox::Pair> transitive_reflexive(
    const std::set<TBox::Pair>& edges, const std::set<std::string>& nodes) {
  std::map<std::string, std::vector<std::string>> out_edges;
  std::set<std::string> all = nodes;
  for (const auto& [child, parent] : edges) {
    out_edges[child].push_back(parent);
    all.insert(child);
    all.insert(parent);
  }
  std::set<TBox::Pair> result;
  for (const std::string& start : all) {
    std::set<std::string> seen{start};
    std::deque<std::string> frontier{start};
    while (!frontier.empty()) {
      std::string node = std::move(frontier.front());
      frontier.pop_front();
      auto it = out_edges.find(node);
      if (it == out_edges.end()) continue;
      for (const std::string& next : it->second) {
        if (seen.insert(next).second) frontier.push_back(next);
      }
    }
    for (const std::string& reached : seen) result.insert({start, reached});
  }
  return result;
}

}  // namespace

TBox closure(TBox t) {
  std::set<std::string> class_nodes = t.declared_classes;
  for (const auto& [inst, cls] : t.class_assertions) class_nodes.insert(cls);
  for (const auto& [prop, classes] : t.domains) {
    class_nodes.insert(classes.begin(), classes.end());
  }
  for (const auto& [prop, classes] : t.ranges) {
    class_nodes.insert(classes.begin(), classes.end());
  }
  t.sub_class_of = transitive_reflexive(t.sub_class_of, class_nodes);

  std::set<std::string> property_nodes = t.declared_properties;
  for (const auto& [prop, classes] : t.domains) property_nodes.insert(prop);
  for (const auto& [prop, classes] : t.ranges) property_nodes.insert(prop);
  for (const auto& [a, b] : t.inverse_of) {
    property_nodes.insert(a);
    property_nodes.insert(b);
  }
  t.sub_property_of = transitive_reflexive(t.sub_property_of, property_nodes);

  for (const auto& [child, parent] : t.sub_class_of) {
    t.declared_classes.insert(child);
  }
  for (const auto& [child, parent] : t.sub_property_of) {
    t.declared_properties.insert(child);
  }

  std::set<TBox::Pair> assertions = t.class_assertions;
  for (const auto& [inst, cls] : t.class_assertions) {
    for (const auto& [child, parent] : t.sub_class_of) {
      if (child == cls) assertions.insert({inst, parent});
    }
  }
  t.class_assertions = std::move(assertions);

  std::set<TBox::Pair> inverses = t.inverse_of;
  for (const auto& [a, b] : t.inverse_of) inverses.insert({b, a});
  t.inverse_of = std::move(inverses);

  t.closed = true;
  return t;
}

TBox tbox_from_quads(const QuadDataset& data) {
  TBox t;
  for (const Quad& q : data.quads()) {
    if (!q.subject.is_iri()) continue;
    const std::string& s = q.subject.value();
    const std::string& p = q.predicate.value();
    if (q.object.is_iri()) {
      const std::string& o = q.object.value();
      if (p == v::rdfs_subClassOf) {
        t.sub_class_of.insert({s, o});
        t.declared_classes.insert(s);
        t.declared_classes.insert(o);
      } else if (p == v::rdfs_subPropertyOf) {
        t.sub_property_of.insert({s, o});
        t.declared_properties.insert(s);
        t.declared_properties.insert(o);
      } else if (p == v::rdf_type) {
        t.class_assertions.insert({s, o});
        t.declared_classes.insert(o);
      } else if (p == v::rdfs_domain) {
        t.domains[s].insert(o);
        t.declared_properties.insert(s);
      } else if (p == v::rdfs_range) {
        t.ranges[s].insert(o);
        t.declared_properties.insert(s);
      } else if (p == v::daq_expectedDataType) {
        t.expected_datatypes[s].insert(o);
      } else if (p == v::sdmx_unitMeasure) {
        t.unit_measures[s].insert(o);
      } else if (p == v::owl_inverseOf) {
        t.inverse_of.insert({s, o});
      }
    } else if (q.object.is_literal() && p == v::rdfs_label) {
      auto it = t.labels.find(s);
      if (it == t.labels.end() || q.object.value() < it->second) {
        t.labels[s] = q.object.value();
      }
    }
  }
  return t;
}

TBox merge(const TBox& a, const TBox& b) {
  TBox out = a;
  out.closed = false;
  out.sub_class_of.insert(b.sub_class_of.begin(), b.sub_class_of.end());
  out.sub_property_of.insert(b.sub_property_of.begin(),
                             b.sub_property_of.end());
  out.class_assertions.insert(b.class_assertions.begin(),
                              b.class_assertions.end());
  out.inverse_of.insert(b.inverse_of.begin(), b.inverse_of.end());
  out.declared_classes.insert(b.declared_classes.begin(),
                              b.declared_classes.end());
  out.declared_properties.insert(b.declared_properties.begin(),
                                 b.declared_properties.end());
  for (const auto& [prop, classes] : b.domains) {
    out.domains[prop].insert(classes.begin(), classes.end());
  }
  for (const auto& [prop, classes] : b.ranges) {
    out.ranges[prop].insert(classes.begin(), classes.end());
  }
  for (const auto& [cls, dts] : b.expected_datatypes) {
    out.expected_datatypes[cls].insert(dts.begin(), dts.end());
  }
  for (const auto& [cls, units] : b.unit_measures) {
    out.unit_measures[cls].insert(units.begin(), units.end());
  }
  for (const auto& [iri, label] : b.labels) {
    auto it = out.labels.find(iri);
    if (it == out.labels.end() || label < it->second) out.labels[iri] = label;
  }
  return out;
}

std::set<std::string> instances_of(const QuadDataset& data,
                                   const std::string& class_iri,
                                   const TBox& t) {
  std::set<std::string> wanted_classes;
  for (const auto& [child, parent] : t.sub_class_of) {
    if (parent == class_iri) wanted_classes.insert(child);
  }
  wanted_classes.insert(class_iri);

  std::set<std::string> out;
  for (const Quad& q : data.quads()) {
    if (q.predicate.value() == v::rdf_type && q.subject.is_iri() &&
        q.object.is_iri() && wanted_classes.count(q.object.value())) {
      out.insert(q.subject.value());
    }
  }
  return out;
}

namespace {

// Properties below `root` (excluding it) whose range covers `target`;
// resolved endpoints are the properties' domains.
struct LevelResolution {
  std::set<std::string> endpoints;   // distinct domain classes
  std::string chosen_property;       // smallest property when unambiguous
};

LevelResolution resolve_level(const TBox& closed, const std::string& root,
                              const std::string& target) {
  LevelResolution r;
  std::set<std::string> matching_properties;
  for (const auto& [child, parent] : closed.sub_property_of) {
    if (parent != root || child == root) continue;
    auto ranges_it = closed.ranges.find(child);
    if (ranges_it == closed.ranges.end()) continue;
    bool covers = false;
    for (const std::string& range : ranges_it->second) {
      if (closed.is_subclass(target, range)) {
        covers = true;
        break;
      }
    }
    if (!covers) continue;
    auto domains_it = closed.domains.find(child);
    if (domains_it == closed.domains.end()) continue;
    matching_properties.insert(child);
    r.endpoints.insert(domains_it->second.begin(), domains_it->second.end());
  }
  if (r.endpoints.size() == 1 && !matching_properties.empty()) {
    r.chosen_property = *matching_properties.begin();
  }
  return r;
}

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

}  // namespace

Result<LoadedExtension, ExtensionError> load_extension(const QuadDataset& ext,
                                                       const TBox& base) {
  TBox ext_t = tbox_from_quads(ext);
  TBox closed = closure(merge(base, ext_t));

  // Metric classes introduced by this extension document.
  std::set<std::string> ext_subjects;
  for (const Quad& q : ext.quads()) {
    if (q.subject.is_iri()) ext_subjects.insert(q.subject.value());
  }
  std::set<std::string> metric_classes;
  for (const auto& [child, parent] : closed.sub_class_of) {
    if (parent == v::daq_Metric && child != v::daq_Metric &&
        ext_subjects.count(child)) {
      metric_classes.insert(child);
    }
  }

  std::vector<std::string> defects;
  std::vector<MetricDescriptor> descriptors;
  for (const std::string& metric : metric_classes) {
    bool usable = true;
    MetricDescriptor d;
    d.metric_class = metric;

    auto dt_it = closed.expected_datatypes.find(metric);
    if (dt_it == closed.expected_datatypes.end() || dt_it->second.empty()) {
      defects.push_back("metric class " + metric +
                        " lacks daq:expectedDataType");
      usable = false;
    } else if (dt_it->second.size() > 1) {
      defects.push_back("metric class " + metric +
                        " declares multiple expected datatypes: " +
                        join(dt_it->second));
      usable = false;
    } else {
      d.expected_data_type = *dt_it->second.begin();
      if (!xsd::is_recognized_datatype(d.expected_data_type)) {
        defects.push_back("metric class " + metric +
                          ": expected datatype " + d.expected_data_type +
                          " is not a recognized datatype");
        usable = false;
      }
    }

    auto metric_level = resolve_level(closed, v::daq_hasMetric, metric);
    if (metric_level.endpoints.empty()) {
      defects.push_back("metric class " + metric +
                        " has no resolvable quality dimension");
      usable = false;
    } else if (metric_level.endpoints.size() > 1) {
      defects.push_back("metric class " + metric +
                        " resolves to multiple quality dimensions: " +
                        join(metric_level.endpoints));
      usable = false;
    } else {
      d.dimension_class = *metric_level.endpoints.begin();
      d.has_metric_sub_property = metric_level.chosen_property;
      if (!closed.is_subclass(d.dimension_class, v::daq_Dimension)) {
        defects.push_back("metric class " + metric + ": resolved dimension " +
                          d.dimension_class +
                          " is not a subclass of daq:Dimension");
        usable = false;
      }
    }

    if (usable) {
      auto dim_level =
          resolve_level(closed, v::daq_hasDimension, d.dimension_class);
      if (dim_level.endpoints.empty()) {
        defects.push_back("quality dimension " + d.dimension_class +
                          " (of metric " + metric +
                          ") has no resolvable category");
        usable = false;
      } else if (dim_level.endpoints.size() > 1) {
        defects.push_back("quality dimension " + d.dimension_class +
                          " (of metric " + metric +
                          ") resolves to multiple categories: " +
                          join(dim_level.endpoints));
        usable = false;
      } else {
        d.category_class = *dim_level.endpoints.begin();
        d.has_dimension_sub_property = dim_level.chosen_property;
        if (!closed.is_subclass(d.category_class, v::daq_Category)) {
          defects.push_back("metric class " + metric +
                            ": resolved category " + d.category_class +
                            " is not a subclass of daq:Category");
          usable = false;
        }
      }
    }

    if (auto unit_it = closed.unit_measures.find(metric);
        unit_it != closed.unit_measures.end() && !unit_it->second.empty()) {
      d.unit_measure = *unit_it->second.begin();
    }
    if (auto label_it = closed.labels.find(metric);
        label_it != closed.labels.end()) {
      d.label = label_it->second;
    }

    if (usable) descriptors.push_back(std::move(d));
  }

  if (!defects.empty()) {
    return ExtensionError{std::move(defects)};
  }
  return LoadedExtension{std::move(descriptors), std::move(closed)};
}

}  // namespace qualcube::daq
