#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qualcube/term.hpp"

namespace qualcube::rdf {

// One statement. `graph` absent means the default graph; when present it is
// always an IRI term.
struct Quad {
  Quad(Term subject, Term predicate, Term object,
       std::optional<Term> graph = std::nullopt);

  Term subject;
  Term predicate;
  Term object;
  std::optional<Term> graph;

  friend bool operator==(const Quad&, const Quad&) = default;
  std::strong_ordering operator<=>(const Quad& other) const;
};

// A set of quads plus serialization-only prefix hints. Treated as immutable
// once shared: build it fully, then hand out const references.
class QuadDataset {
 public:
  // Returns false when the quad was already present.
  bool add(Quad quad);
  void add_prefix(const std::string& prefix, const std::string& iri);
  void merge_prefixes(const QuadDataset& other);

  const std::set<Quad>& quads() const { return quads_; }
  const std::map<std::string, std::string>& prefixes() const {
    return prefixes_;
  }

  std::size_t size() const { return quads_.size(); }
  bool empty() const { return quads_.empty(); }
  bool contains(const Quad& quad) const { return quads_.count(quad) > 0; }

  // Distinct named-graph terms, sorted.
  std::vector<Term> graph_names() const;
  bool has_named_graphs() const;

  // All quads whose graph component equals `graph` (absent = default graph).
  std::set<Quad> graph_view(const std::optional<Term>& graph) const;

  friend bool operator==(const QuadDataset& a, const QuadDataset& b) {
    return a.quads_ == b.quads_;
  }

 private:
  std::set<Quad> quads_;
  std::map<std::string, std::string> prefixes_;
};

}  // namespace qualcube::rdf
