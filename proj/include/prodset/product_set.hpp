#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace prodset {

// A_k = { r(k-r) : 1 <= r <= k-1 }. Symmetric in r <-> k-r, so enumerating
// r up to floor(k/2) yields every element exactly once, in increasing order.
struct ProductSet {
  std::int64_t k = 0;
  std::vector<std::int64_t> values;  // strictly increasing, floor(k/2) of them
};

// Materialization guard: sets larger than this many elements must be queried
// through product_set_contains instead.
inline constexpr std::size_t kDefaultMaterializeCap = 10'000'000;

// Builds A_k. Rejects k < 2 and k beyond the supported width; rejects k whose
// set would exceed the cap.
ProductSet product_set(std::int64_t k, std::size_t cap = kDefaultMaterializeCap);

// Membership test without materializing: v = r(k-r) for an integer r iff
// k^2 - 4v is a perfect square s^2 with s <= k-2 and s = k (mod 2).
bool product_set_contains(std::int64_t k, std::int64_t v);

// Sorted distinct A_n intersect A_m, by hashing the smaller set and probing
// with the larger. O(n + m) time. Requires 2 <= n < m.
std::vector<std::int64_t> intersect_bruteforce(std::int64_t n, std::int64_t m,
                                               std::size_t cap = kDefaultMaterializeCap);

}  // namespace prodset
