#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qualcube::rdf {

enum class TermKind { Iri, BlankNode, Literal };

// An RDF term. Immutable value type with structural equality and a
// deterministic total order (kind, then fields). Blank-node labels compare
// shortlex so b2 < b10, which keeps canonical serialization stable.
class Term {
 public:
  static Term iri(std::string value);
  static Term blank(std::string label);
  // Typed literal; language-string datatype is rejected here (use lang()).
  static Term literal(std::string lexical, std::string datatype_iri);
  // Plain literal, normalized to xsd:string.
  static Term literal(std::string lexical);
  static Term lang(std::string lexical, std::string language_tag);
  static Term boolean(bool value);
  static Term integer(long long value);
  static Term double_value(double value);
  static Term date_time(std::string iso8601_utc);

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_blank() const { return kind_ == TermKind::BlankNode; }
  bool is_literal() const { return kind_ == TermKind::Literal; }

  // IRI string (Iri), label (BlankNode), or lexical form (Literal).
  const std::string& value() const { return value_; }
  // Literal only; xsd:string for plain, rdf:langString for tagged.
  const std::string& datatype() const { return datatype_; }
  const std::optional<std::string>& language() const { return language_; }

  friend bool operator==(const Term&, const Term&) = default;
  std::strong_ordering operator<=>(const Term& other) const;

 private:
  Term(TermKind kind, std::string value, std::string datatype,
       std::optional<std::string> language)
      : kind_(kind),
        value_(std::move(value)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::optional<std::string> language_;
};

}  // namespace qualcube::rdf
