#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace sfrob {

inline constexpr std::uint64_t kSequenceLimit = 10'000'000;
inline constexpr std::uint64_t kMultipartitionLimit = 10'000;
inline constexpr const char* kCodeVersion = "superfrob-1.0.0";

// Enumeration bounds; --force swaps in unbounded().
struct Limits {
  std::uint64_t sequences = kSequenceLimit;        // (k+l)^n
  std::uint64_t multipartitions = kMultipartitionLimit;  // |P_{m,n}|
  static Limits unbounded() {
    return {std::numeric_limits<std::uint64_t>::max(), std::numeric_limits<std::uint64_t>::max()};
  }
};

}  // namespace sfrob
