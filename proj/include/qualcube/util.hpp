#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qualcube::util {

using TimePoint =
    std::chrono::time_point<std::chrono::system_clock, std::chrono::seconds>;

// FNV-1a 64-bit, hex-encoded. Stable across platforms, unlike std::hash.
std::string fnv1a64_hex(std::string_view data);

// SplitMix64: tiny portable PRNG for reproducible sampling. std::shuffle
// with std::mt19937 is implementation-defined, so selections that end up
// in observable output go through this instead.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform draw in [0, bound) via rejection sampling.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// "2014-09-04T12:30:00Z" (optionally with fraction, which is dropped;
// optionally with a +hh:mm / -hh:mm offset, which is applied).
std::optional<TimePoint> parse_iso8601(std::string_view text);
std::string format_iso8601(TimePoint tp);

// Shortest round-trip decimal form ("0.75", "1", "2.5e-05").
std::string format_double(double value);

}  // namespace qualcube::util
