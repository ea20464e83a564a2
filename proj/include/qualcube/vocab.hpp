#pragma once

#include <string>

// Every namespace and well-known IRI used by the toolkit, in one place.
namespace qualcube::vocab {

// Namespace prefixes.
inline const std::string kDaq = "http://purl.org/eis/vocab/daq#";
inline const std::string kQb = "http://purl.org/linked-data/cube#";
inline const std::string kSdmxAttribute =
    "http://purl.org/linked-data/sdmx/2009/attribute#";
inline const std::string kDcTerms = "http://purl.org/dc/terms/";
inline const std::string kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string kXsd = "http://www.w3.org/2001/XMLSchema#";
inline const std::string kRdfg = "http://www.w3.org/2004/03/trix/rdfg-1/";
inline const std::string kOwl = "http://www.w3.org/2002/07/owl#";
// Namespace of the metric vocabulary shipped with this toolkit.
inline const std::string kQm = "http://purl.org/qualcube/vocab/qm#";

// daQ core.
inline const std::string daq_QualityGraph = kDaq + "QualityGraph";
inline const std::string daq_Category = kDaq + "Category";
inline const std::string daq_Dimension = kDaq + "Dimension";
inline const std::string daq_Metric = kDaq + "Metric";
inline const std::string daq_hasDimension = kDaq + "hasDimension";
inline const std::string daq_hasMetric = kDaq + "hasMetric";
inline const std::string daq_hasObservation = kDaq + "hasObservation";
inline const std::string daq_metric = kDaq + "metric";
inline const std::string daq_computedOn = kDaq + "computedOn";
inline const std::string daq_value = kDaq + "value";
inline const std::string daq_expectedDataType = kDaq + "expectedDataType";
inline const std::string daq_dsd = kDaq + "dsd";
// Recognized for interoperability; rule semantics are not interpreted.
inline const std::string daq_requires = kDaq + "requires";

// Data Cube.
inline const std::string qb_DataSet = kQb + "DataSet";
inline const std::string qb_Observation = kQb + "Observation";
inline const std::string qb_ObservationGroup = kQb + "ObservationGroup";
inline const std::string qb_observation = kQb + "observation";
inline const std::string qb_dataSet = kQb + "dataSet";
inline const std::string qb_structure = kQb + "structure";
inline const std::string qb_DataStructureDefinition =
    kQb + "DataStructureDefinition";
inline const std::string qb_DimensionProperty = kQb + "DimensionProperty";
inline const std::string qb_MeasureProperty = kQb + "MeasureProperty";
inline const std::string qb_AttributeProperty = kQb + "AttributeProperty";
inline const std::string qb_ComponentSpecification =
    kQb + "ComponentSpecification";
inline const std::string qb_component = kQb + "component";
inline const std::string qb_dimension = kQb + "dimension";
inline const std::string qb_measure = kQb + "measure";
inline const std::string qb_attribute = kQb + "attribute";
inline const std::string qb_order = kQb + "order";
inline const std::string qb_componentRequired = kQb + "componentRequired";

// SDMX / Dublin Core.
inline const std::string sdmx_unitMeasure = kSdmxAttribute + "unitMeasure";
inline const std::string dc_date = kDcTerms + "date";

// RDF(S).
inline const std::string rdf_type = kRdf + "type";
inline const std::string rdf_langString = kRdf + "langString";
inline const std::string rdf_Property = kRdf + "Property";
inline const std::string rdfs_Class = kRdfs + "Class";
inline const std::string rdfs_subClassOf = kRdfs + "subClassOf";
inline const std::string rdfs_subPropertyOf = kRdfs + "subPropertyOf";
inline const std::string rdfs_label = kRdfs + "label";
inline const std::string rdfs_domain = kRdfs + "domain";
inline const std::string rdfs_range = kRdfs + "range";
inline const std::string rdfg_Graph = kRdfg + "Graph";
inline const std::string owl_inverseOf = kOwl + "inverseOf";

// XSD datatypes.
inline const std::string xsd_string = kXsd + "string";
inline const std::string xsd_boolean = kXsd + "boolean";
inline const std::string xsd_integer = kXsd + "integer";
inline const std::string xsd_decimal = kXsd + "decimal";
inline const std::string xsd_double = kXsd + "double";
inline const std::string xsd_float = kXsd + "float";
inline const std::string xsd_date = kXsd + "date";
inline const std::string xsd_dateTime = kXsd + "dateTime";
inline const std::string xsd_anyURI = kXsd + "anyURI";
inline const std::string xsd_long = kXsd + "long";
inline const std::string xsd_int = kXsd + "int";

// Unit used for every duration-valued observation (seconds).
inline const std::string unit_seconds = "http://qudt.org/vocab/unit#Seconds";

}  // namespace qualcube::vocab
