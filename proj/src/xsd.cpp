#include "qualcube/xsd.hpp"

#include <cctype>
#include <cstddef>

#include "qualcube/util.hpp"
#include "qualcube/vocab.hpp"

namespace qualcube::xsd {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view strip_sign(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  return s;
}

}  // namespace

bool valid_integer(std::string_view s) { return all_digits(strip_sign(s)); }

bool valid_decimal(std::string_view s) {
  s = strip_sign(s);
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return all_digits(s);
  std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
  if (ip.empty() && fp.empty()) return false;
  if (!ip.empty() && !all_digits(ip)) return false;
  if (!fp.empty() && !all_digits(fp)) return false;
  return true;
}

bool valid_double(std::string_view s) {
  if (s == "INF" || s == "-INF" || s == "+INF" || s == "NaN") return true;
  auto e = s.find_first_of("eE");
  if (e == std::string_view::npos) return valid_decimal(s);
  std::string_view mantissa = s.substr(0, e), exponent = s.substr(e + 1);
  return valid_decimal(mantissa) && all_digits(strip_sign(exponent));
}

bool valid_boolean(std::string_view s) {
  return s == "true" || s == "false" || s == "1" || s == "0";
}

namespace {

// YYYY-MM-DD with calendar validation; returns chars consumed or 0.
std::size_t match_date_part(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t year_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  std::size_t year_digits = i - year_start;
  if (year_digits < 4) return 0;
  // No leading zeros beyond four digits.
  if (year_digits > 4 && s[year_start] == '0') return 0;
  if (i + 6 > s.size() || s[i] != '-') return 0;
  int month = 0, day = 0;
  for (int k = 1; k <= 2; ++k) {
    char c = s[i + k];
    if (!std::isdigit(static_cast<unsigned char>(c))) return 0;
    month = month * 10 + (c - '0');
  }
  if (s[i + 3] != '-') return 0;
  for (int k = 4; k <= 5; ++k) {
    char c = s[i + k];
    if (!std::isdigit(static_cast<unsigned char>(c))) return 0;
    day = day * 10 + (c - '0');
  }
  if (month < 1 || month > 12 || day < 1) return 0;
  int year = 0;
  bool overflow = year_digits > 8;
  for (std::size_t k = year_start; k < year_start + year_digits && !overflow;
       ++k) {
    year = year * 10 + (s[k] - '0');
  }
  static const int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int max_day = kDays[month - 1];
  bool leap = overflow || (year % 4 == 0 && (year % 100 != 0 || year % 400 == 0));
  if (month == 2 && leap) max_day = 29;
  if (day > max_day) return 0;
  return i + 6;
}

// Z | +hh:mm | -hh:mm; returns chars consumed, 0 when absent, npos on junk.
std::size_t match_timezone(std::string_view s) {
  if (s.empty()) return 0;
  if (s[0] == 'Z') return s.size() == 1 ? 1 : std::string_view::npos;
  if (s[0] != '+' && s[0] != '-') return std::string_view::npos;
  if (s.size() != 6 || s[3] != ':') return std::string_view::npos;
  int hh = 0, mm = 0;
  for (int k : {1, 2}) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      return std::string_view::npos;
    hh = hh * 10 + (s[k] - '0');
  }
  for (int k : {4, 5}) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      return std::string_view::npos;
    mm = mm * 10 + (s[k] - '0');
  }
  if (hh > 14 || mm > 59 || (hh == 14 && mm != 0))
    return std::string_view::npos;
  return 6;
}

// hh:mm:ss with optional fraction; 24:00:00 permitted.
std::size_t match_time_part(std::string_view s) {
  if (s.size() < 8 || s[2] != ':' || s[5] != ':') return 0;
  int h = 0, m = 0, sec = 0;
  auto two = [&](std::size_t at, int& out) {
    if (!std::isdigit(static_cast<unsigned char>(s[at])) ||
        !std::isdigit(static_cast<unsigned char>(s[at + 1]))) {
      return false;
    }
    out = (s[at] - '0') * 10 + (s[at + 1] - '0');
    return true;
  };
  if (!two(0, h) || !two(3, m) || !two(6, sec)) return 0;
  if (h > 24 || m > 59 || sec > 59) return 0;
  if (h == 24 && (m != 0 || sec != 0)) return 0;
  std::size_t i = 8;
  if (i < s.size() && s[i] == '.') {
    ++i;
    std::size_t frac_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == frac_start) return 0;
    if (h == 24) return 0;
  }
  return i;
}

}  // namespace

bool valid_date(std::string_view s) {
  std::size_t n = match_date_part(s);
  if (n == 0) return false;
  auto tz = match_timezone(s.substr(n));
  return tz != std::string_view::npos && n + tz == s.size();
}

bool valid_date_time(std::string_view s) {
  std::size_t n = match_date_part(s);
  if (n == 0 || n >= s.size() || s[n] != 'T') return false;
  std::size_t t = match_time_part(s.substr(n + 1));
  if (t == 0) return false;
  std::size_t rest = n + 1 + t;
  auto tz = match_timezone(s.substr(rest));
  return tz != std::string_view::npos && rest + tz == s.size();
}

bool is_checkable_datatype(std::string_view dt) {
  return dt == vocab::xsd_integer || dt == vocab::xsd_decimal ||
         dt == vocab::xsd_double || dt == vocab::xsd_float ||
         dt == vocab::xsd_boolean || dt == vocab::xsd_date ||
         dt == vocab::xsd_dateTime;
}

bool is_recognized_datatype(std::string_view dt) {
  return is_checkable_datatype(dt) || dt == vocab::xsd_string ||
         dt == vocab::xsd_anyURI || dt == vocab::xsd_long ||
         dt == vocab::xsd_int;
}

bool lexical_valid(std::string_view lexical, std::string_view dt) {
  if (dt == vocab::xsd_integer) return valid_integer(lexical);
  if (dt == vocab::xsd_decimal) return valid_decimal(lexical);
  if (dt == vocab::xsd_double || dt == vocab::xsd_float)
    return valid_double(lexical);
  if (dt == vocab::xsd_boolean) return valid_boolean(lexical);
  if (dt == vocab::xsd_date) return valid_date(lexical);
  if (dt == vocab::xsd_dateTime) return valid_date_time(lexical);
  return true;
}

}  // namespace qualcube::xsd
