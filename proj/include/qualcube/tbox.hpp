#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qualcube/dataset.hpp"
#include "qualcube/result.hpp"

namespace qualcube::daq {

// Schema-level statements: class/property hierarchies plus the annotations
// the toolkit reads off metric classes. Values are immutable once closed.
struct TBox {
  using Pair = std::pair<std::string, std::string>;

  std::set<Pair> sub_class_of;      // (child, parent)
  std::set<Pair> sub_property_of;   // (child, parent)
  std::set<Pair> class_assertions;  // (instance, class)
  std::set<Pair> inverse_of;        // (property, property), symmetric

  std::set<std::string> declared_classes;
  std::set<std::string> declared_properties;
  std::map<std::string, std::set<std::string>> domains;  // property -> class
  std::map<std::string, std::set<std::string>> ranges;   // property -> class

  // Annotations read from extension documents, keyed by metric class.
  std::map<std::string, std::set<std::string>> expected_datatypes;
  std::map<std::string, std::set<std::string>> unit_measures;
  std::map<std::string, std::string> labels;  // any IRI -> rdfs:label

  bool closed = false;

  bool is_subclass(const std::string& child, const std::string& parent) const {
    return sub_class_of.count({child, parent}) > 0;
  }
  bool is_subproperty(const std::string& child,
                      const std::string& parent) const {
    return sub_property_of.count({child, parent}) > 0;
  }

  bool operator==(const TBox&) const = default;
};

// The daQ core hierarchy and Data Cube property typings, already closed:
// daq:Category / daq:Dimension / daq:Metric roots, daq:QualityGraph under
// qb:DataSet and rdfg:Graph, daq:metric and daq:computedOn typed
// qb:DimensionProperty, daq:value a qb:MeasureProperty, unitMeasure and
// dc:date typed qb:AttributeProperty, daq:hasObservation inverse of
// daq:metric.
TBox builtin_daq_tbox();

// The fixed data structure definition all quality graphs reference:
// daq:dsd with two dimensions (daq:metric, daq:computedOn), the daq:value
// measure, an optional unitMeasure attribute and a required dc:date
// attribute. Blank component nodes carry fixed labels, so re-emission is
// deterministic.
std::set<rdf::Quad> dsd_definition();

// Built-in TBox plus DSD as a dataset with prefixes, for `vocab dump`.
rdf::QuadDataset builtin_vocabulary();

// Reflexive-transitive closure of both hierarchies, upward propagation of
// class assertions, symmetrized inverses. Idempotent; cycles collapse into
// mutual sub-relations.
TBox closure(TBox t);

// Schema statements of a parsed document folded into TBox fields
// (subClassOf, subPropertyOf, type, domain, range, expectedDataType,
// unitMeasure, label, inverseOf), all graphs included. Returns it unclosed.
TBox tbox_from_quads(const rdf::QuadDataset& data);

// Field-wise union. Closure state is dropped; close the result again.
TBox merge(const TBox& a, const TBox& b);

// IRIs asserted (via rdf:type, any graph) to be instances of class_iri or
// any of its transitive subclasses. Requires a closed TBox.
std::set<std::string> instances_of(const rdf::QuadDataset& data,
                                   const std::string& class_iri,
                                   const TBox& t);

// One metric vocabulary entry resolved per the extension pattern: a metric
// class reached from its category through declared sub-properties of
// daq:hasDimension and daq:hasMetric.
struct MetricDescriptor {
  std::string metric_class;
  std::string dimension_class;
  std::string category_class;
  std::string has_metric_sub_property;
  std::string has_dimension_sub_property;
  std::string expected_data_type;
  std::optional<std::string> unit_measure;
  std::optional<std::string> label;
};

struct ExtensionError {
  std::vector<std::string> defects;  // every problem found, one line each
};

struct LoadedExtension {
  std::vector<MetricDescriptor> descriptors;  // sorted by metric class
  TBox merged;                                // base + extension, closed
};

// Resolves every proper subclass of daq:Metric declared in ext against the
// merged, closed hierarchy. Metric classes must carry daq:expectedDataType
// (a recognized datatype) and resolve to exactly one dimension and one
// category; all defects are reported together.
Result<LoadedExtension, ExtensionError> load_extension(
    const rdf::QuadDataset& ext, const TBox& base);

}  // namespace qualcube::daq
