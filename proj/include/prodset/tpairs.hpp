#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prodset/numtheory.hpp"

namespace prodset {

// An admissible factor pair of m^2 - n^2 in the context (n, m):
//   lo * hi = m^2 - n^2,  lo + hi < 2m,  0 < lo <= hi < lo + 2n.
// Each common element of A_n and A_m corresponds to exactly one such pair.
struct TPair {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const TPair&, const TPair&) = default;
};

// A witness that `value` lies in both sets: value = i(n-i) = j(m-j) with
// offset_n = i in [1, n/2] and offset_m = j in [1, m/2].
struct SolutionPair {
  std::int64_t offset_n = 0;
  std::int64_t offset_m = 0;
  std::int64_t value = 0;
  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

struct IntersectionBoundReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t intersection_size = 0;
  std::int64_t tau = 0;
  bool equality_expected = false;  // m even and n odd: equality is guaranteed
  bool inequality_holds = false;   // intersection_size <= tau
  bool equality_holds = false;     // intersection_size == tau
};

// All admissible pairs for (n, m), ascending by lo. Requires 2 <= n < m.
std::vector<TPair> enumerate_tpairs(std::int64_t n, std::int64_t m);

// |enumerate_tpairs(n, m)|.
std::int64_t tau(std::int64_t n, std::int64_t m);

// Inverts a factor pair to its solution offsets:
//   offset_m = (2m - lo - hi) / 4,  offset_n = (2n + lo - hi) / 4.
// Returns nothing when either quotient is non-integral or an offset falls
// outside its range; that is the normal outcome for inadmissible pairs.
std::optional<SolutionPair> solution_from_pair(const TPair& pair);

// Sorted distinct common values of A_n and A_m obtained by mapping
// solution_from_pair over enumerate_tpairs. Agrees with intersect_bruteforce
// on every input (enforced by the test suite, not assumed here).
std::vector<std::int64_t> intersect_fast(std::int64_t n, std::int64_t m);

// Computes intersection size (fast path) and tau, and evaluates the bound
// and the parity equality case. Never throws on a violated expectation; the
// caller decides what a violation means.
IntersectionBoundReport intersection_bound_report(std::int64_t n, std::int64_t m);

}  // namespace prodset
