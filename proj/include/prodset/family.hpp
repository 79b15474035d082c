#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prodset/numtheory.hpp"

namespace prodset {

// Parameters of the constructed pair m = 2^alpha * p^s + 1, n = m - 2,
// which forces |A_n intersect A_m| = target_size exactly. Requires
// 2^alpha > p^s, which gives m^2 - n^2 = 2^(alpha+2) * p^s.
struct FamilySpec {
  std::int64_t target_size = 0;    // s: the intersection size achieved
  std::int64_t prime = 0;          // p: odd prime >= 3
  std::int64_t pow2_exponent = 0;  // alpha
  std::int64_t n = 0;
  std::int64_t m = 0;
};

// Brute-force validation is run on construction whenever m is at most this.
inline constexpr std::int64_t kFamilyOracleCap = 1'000'000;

// Builds and self-validates a FamilySpec. When alpha is omitted the minimal
// exponent with 2^alpha > p^s is chosen. Rejects composite or even p, an
// alpha violating the exponent constraint, and any m beyond the supported
// width. A failed self-validation throws falsification_error.
FamilySpec construct_pair(std::int64_t target_size, std::int64_t prime,
                          std::optional<std::int64_t> pow2_exponent = std::nullopt);

// The s factor pairs (2 p^(s-i), 2^(alpha+1) p^i), i = 0 .. s-1, that carry
// the whole intersection. Each is an admissible pair of (n, m) and inverts
// to a distinct solution; no other admissible pair does.
std::vector<FactorPair> predicted_pairs(const FamilySpec& spec);

// `count` specs with strictly increasing primes 3, 5, 7, ... and minimal
// alpha each, hence pairwise distinct (n, m), all with intersection size
// target_size.
std::vector<FamilySpec> construct_sequence(std::int64_t target_size, std::int64_t count);

}  // namespace prodset
