#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace prodset {

// splitmix64: small seeded generator with identical output on every
// platform, which the seeded CLI modes and the test generators rely on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), multiply-shift. bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// `count` distinct integers from [lo, hi], sorted ascending.
inline std::vector<std::int64_t> sample_distinct(SplitMix64& rng, std::int64_t count,
                                                 std::int64_t lo, std::int64_t hi) {
  if (count < 0 || hi < lo || count > hi - lo + 1) {
    throw std::invalid_argument("sample_distinct: count exceeds range");
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  // Rejection sampling; fine while count is much smaller than the range,
  // which is the only regime the callers use.
  while (static_cast<std::int64_t>(out.size()) < count) {
    std::int64_t v = rng.range(lo, hi);
    bool dup = false;
    for (std::int64_t s : out) {
      if (s == v) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace prodset
