#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qualcube/dataset.hpp"
#include "qualcube/result.hpp"

namespace qualcube::rdf {

enum class Format { NTriples, NQuads, Turtle, TriG };

struct ParseError {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based, in bytes
  std::string message;
  Format format = Format::Turtle;
};

using ParseResult = Result<QuadDataset, ParseError>;

// Parses UTF-8 text in the given format. The Turtle/TriG dialect covers
// prefix and base directives, `a`, predicate-object and object lists,
// anonymous blank-node property lists, typed and language-tagged literals,
// and numeric/boolean shorthand. RDF collections and quoted triples are
// rejected with dedicated messages. Relative IRIs are an error unless a
// base is supplied to this call or declared in the document. Blank-node
// labels are freshly scoped per document (b0, b1, ... in first-occurrence
// order), so labels never leak between parses.
ParseResult parse_document(std::string_view text, Format format,
                           std::optional<std::string> base = std::nullopt);

std::string_view format_name(Format format);
// text/turtle, application/n-triples, application/trig, application/n-quads
std::string_view format_media_type(Format format);
// Inverse of the above; parameters after ';' are ignored.
std::optional<Format> format_from_media_type(std::string_view media_type);
// By file suffix: .nt, .nq, .ttl, .trig.
std::optional<Format> format_from_path(std::string_view path);

}  // namespace qualcube::rdf
