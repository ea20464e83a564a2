#include "qualcube/dataset.hpp"

#include <stdexcept>

namespace qualcube::rdf {

Quad::Quad(Term s, Term p, Term o, std::optional<Term> g)
    : subject(std::move(s)),
      predicate(std::move(p)),
      object(std::move(o)),
      graph(std::move(g)) {
  if (subject.is_literal()) {
    throw std::invalid_argument("quad subject must not be a literal");
  }
  if (!predicate.is_iri()) {
    throw std::invalid_argument("quad predicate must be an IRI");
  }
  if (graph && !graph->is_iri()) {
    throw std::invalid_argument("graph name must be an IRI");
  }
}

std::strong_ordering Quad::operator<=>(const Quad& o) const {
  if (auto c = subject <=> o.subject; c != 0) return c;
  if (auto c = predicate <=> o.predicate; c != 0) return c;
  if (auto c = object <=> o.object; c != 0) return c;
  if (!graph && !o.graph) return std::strong_ordering::equal;
  if (!graph) return std::strong_ordering::less;
  if (!o.graph) return std::strong_ordering::greater;
  return *graph <=> *o.graph;
}

bool QuadDataset::add(Quad quad) {
  return quads_.insert(std::move(quad)).second;
}

void QuadDataset::add_prefix(const std::string& prefix,
                             const std::string& iri) {
  prefixes_[prefix] = iri;
}

void QuadDataset::merge_prefixes(const QuadDataset& other) {
  for (const auto& [p, i] : other.prefixes_) prefixes_.emplace(p, i);
}

std::vector<Term> QuadDataset::graph_names() const {
  std::set<Term> names;
  for (const auto& q : quads_) {
    if (q.graph) names.insert(*q.graph);
  }
  return {names.begin(), names.end()};
}

bool QuadDataset::has_named_graphs() const {
  for (const auto& q : quads_) {
    if (q.graph) return true;
  }
  return false;
}

std::set<Quad> QuadDataset::graph_view(
    const std::optional<Term>& graph) const {
  std::set<Quad> view;
  for (const auto& q : quads_) {
    if (q.graph == graph) view.insert(q);
  }
  return view;
}

}  // namespace qualcube::rdf
