#include "qualcube/util.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace qualcube::util {

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) return 0;
  std::uint64_t threshold = -bound % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

namespace {

bool read_int(std::string_view s, std::size_t& i, int digits, int& out) {
  if (i + digits > s.size()) return false;
  int value = 0;
  for (int k = 0; k < digits; ++k) {
    char c = s[i + k];
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
  }
  i += digits;
  out = value;
  return true;
}

}  // namespace

std::optional<TimePoint> parse_iso8601(std::string_view s) {
  std::size_t i = 0;
  bool negative_year = false;
  if (i < s.size() && s[i] == '-') {
    negative_year = true;
    ++i;
  }
  int y, mo, d, h, mi, sec;
  if (!read_int(s, i, 4, y)) return std::nullopt;
  // XSD permits years with more than four digits.
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    y = y * 10 + (s[i] - '0');
    ++i;
  }
  if (negative_year) y = -y;
  if (i >= s.size() || s[i] != '-') return std::nullopt;
  ++i;
  if (!read_int(s, i, 2, mo)) return std::nullopt;
  if (i >= s.size() || s[i] != '-') return std::nullopt;
  ++i;
  if (!read_int(s, i, 2, d)) return std::nullopt;
  if (i >= s.size() || (s[i] != 'T' && s[i] != 't')) return std::nullopt;
  ++i;
  if (!read_int(s, i, 2, h)) return std::nullopt;
  if (i >= s.size() || s[i] != ':') return std::nullopt;
  ++i;
  if (!read_int(s, i, 2, mi)) return std::nullopt;
  if (i >= s.size() || s[i] != ':') return std::nullopt;
  ++i;
  if (!read_int(s, i, 2, sec)) return std::nullopt;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  }
  int offset_minutes = 0;
  if (i < s.size()) {
    char c = s[i];
    if (c == 'Z' || c == 'z') {
      ++i;
    } else if (c == '+' || c == '-') {
      ++i;
      int oh, om;
      if (!read_int(s, i, 2, oh)) return std::nullopt;
      if (i >= s.size() || s[i] != ':') return std::nullopt;
      ++i;
      if (!read_int(s, i, 2, om)) return std::nullopt;
      offset_minutes = oh * 60 + om;
      if (c == '-') offset_minutes = -offset_minutes;
    }
  }
  if (i != s.size()) return std::nullopt;
  if (mo < 1 || mo > 12 || d < 1 || d > 31) return std::nullopt;
  if (h > 23 || mi > 59 || sec > 59) return std::nullopt;

  using namespace std::chrono;
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                     day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  auto days = sys_days{ymd};
  auto tp = days + hours{h} + minutes{mi} + seconds{sec};
  tp -= minutes{offset_minutes};
  return TimePoint{tp.time_since_epoch()};
}

std::string format_iso8601(TimePoint tp) {
  using namespace std::chrono;
  auto days = floor<std::chrono::days>(tp);
  year_month_day ymd{sys_days{days.time_since_epoch()}};
  auto rest = tp - days;
  auto h = duration_cast<hours>(rest);
  auto m = duration_cast<minutes>(rest - h);
  auto s = duration_cast<seconds>(rest - h - m);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<long long>(h.count()),
                static_cast<long long>(m.count()),
                static_cast<long long>(s.count()));
  return buf;
}

std::string format_double(double value) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), end);
}

}  // namespace qualcube::util
