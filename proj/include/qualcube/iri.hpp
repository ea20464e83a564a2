#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace qualcube::iri {

// True when the string starts with a scheme per RFC 3986
// (ALPHA *(ALPHA / DIGIT / "+" / "-" / ".") ":").
bool is_absolute(std::string_view iri);

// scheme://host[:port], lower-cased; empty when the IRI has no authority.
std::string authority_of(std::string_view iri);

// Local name heuristic: the suffix after the last '#' or '/', else after
// the last ':'. Used for minting instance IRIs from class IRIs.
std::string local_name(std::string_view iri);

// RFC 3986 section 5 reference resolution (enough of it for RDF bases:
// scheme, authority, path merge, dot-segment removal, query, fragment).
std::string resolve(std::string_view reference, std::string_view base);

}  // namespace qualcube::iri
