#pragma once

#include <string_view>

namespace qualcube::xsd {

// Lexical-form checks for the datatypes the consistency metric knows how
// to verify: integer, decimal, double, float, boolean, date, dateTime.
// Value-space subtleties (timezones on dates, INF/NaN) follow XSD 1.1.

bool is_checkable_datatype(std::string_view datatype_iri);
bool is_recognized_datatype(std::string_view datatype_iri);

// True when `lexical` is valid for `datatype_iri`; callers must ensure the
// datatype is checkable first.
bool lexical_valid(std::string_view lexical, std::string_view datatype_iri);

bool valid_integer(std::string_view s);
bool valid_decimal(std::string_view s);
bool valid_double(std::string_view s);
bool valid_boolean(std::string_view s);
bool valid_date(std::string_view s);
bool valid_date_time(std::string_view s);

}  // namespace qualcube::xsd
