#include "qualcube/term.hpp"

#include "qualcube/iri.hpp"
#include "qualcube/util.hpp"
#include "qualcube/vocab.hpp"

namespace qualcube::rdf {

Term Term::iri(std::string value) {
  if (!qualcube::iri::is_absolute(value)) {
    throw std::invalid_argument("IRI is not absolute: " + value);
  }
  return Term(TermKind::Iri, std::move(value), {}, std::nullopt);
}

Term Term::blank(std::string label) {
  if (label.empty()) {
    throw std::invalid_argument("blank node label must be non-empty");
  }
  return Term(TermKind::BlankNode, std::move(label), {}, std::nullopt);
}

Term Term::literal(std::string lexical, std::string datatype_iri) {
  if (datatype_iri == vocab::rdf_langString) {
    throw std::invalid_argument(
        "language-string literals need a language tag");
  }
  if (!qualcube::iri::is_absolute(datatype_iri)) {
    throw std::invalid_argument("datatype IRI is not absolute: " +
                                datatype_iri);
  }
  return Term(TermKind::Literal, std::move(lexical), std::move(datatype_iri),
              std::nullopt);
}

Term Term::literal(std::string lexical) {
  return Term(TermKind::Literal, std::move(lexical), vocab::xsd_string,
              std::nullopt);
}

Term Term::lang(std::string lexical, std::string tag) {
  if (tag.empty()) {
    throw std::invalid_argument("language tag must be non-empty");
  }
  return Term(TermKind::Literal, std::move(lexical), vocab::rdf_langString,
              std::move(tag));
}

Term Term::boolean(bool value) {
  return literal(value ? "true" : "false", vocab::xsd_boolean);
}

Term Term::integer(long long value) {
  return literal(std::to_string(value), vocab::xsd_integer);
}

Term Term::double_value(double value) {
  return literal(util::format_double(value), vocab::xsd_double);
}

Term Term::date_time(std::string iso) {
  return literal(std::move(iso), vocab::xsd_dateTime);
}

namespace {

// Shortlex: shorter strings first, then lexicographic. Keeps numeric blank
// labels (b0, b1, ..., b10) in numeric order.
std::strong_ordering shortlex(const std::string& a, const std::string& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.compare(b) <=> 0;
}

}  // namespace

std::strong_ordering Term::operator<=>(const Term& o) const {
  if (auto c = kind_ <=> o.kind_; c != 0) return c;
  if (kind_ == TermKind::BlankNode) return shortlex(value_, o.value_);
  if (auto c = value_.compare(o.value_) <=> 0; c != 0) return c;
  if (auto c = datatype_.compare(o.datatype_) <=> 0; c != 0) return c;
  const auto& la = language_ ? *language_ : std::string{};
  const auto& lb = o.language_ ? *o.language_ : std::string{};
  return la.compare(lb) <=> 0;
}

}  // namespace qualcube::rdf
