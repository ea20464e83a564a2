#pragma once

#include <string>

#include "qualcube/dataset.hpp"
#include "qualcube/parse.hpp"

namespace qualcube::rdf {

// Canonical N-Quads: one quad per line, sorted by the deterministic term
// order with blank nodes compared by a label-invariant canonical key, then
// relabeled b0, b1, ... in first-occurrence order. Datasets equal up to a
// blank-node bijection produce byte-identical output, and serializing a
// reparsed canonical document reproduces it byte for byte.
std::string to_canonical_nquads(const QuadDataset& dataset);

// Same lines without a graph component. Throws std::invalid_argument when
// the dataset has named graphs.
std::string to_canonical_ntriples(const QuadDataset& dataset);

// Pretty printers: prefix abbreviation where the local part stays lexable,
// `a` for rdf:type, predicate and object lists, subjects sorted. Literal
// shorthand (bare numbers, true/false) only when the lexical form reads
// back as the same datatype. Deterministic for a given dataset.
std::string to_turtle(const QuadDataset& dataset);
std::string to_trig(const QuadDataset& dataset);

// Dispatch on format. NTriples/Turtle throw std::invalid_argument when the
// dataset has named graphs.
std::string serialize(const QuadDataset& dataset, Format format);

// One term in N-Triples surface syntax, for messages and reports.
std::string term_to_ntriples(const Term& term);

}  // namespace qualcube::rdf
