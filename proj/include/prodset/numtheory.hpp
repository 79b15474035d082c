#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace prodset {

// All values handled by the library fit in a signed 64-bit integer. Set
// indices (the k of A_k, and the n < m of intersections) are additionally
// capped so that squares and differences of squares never overflow.
inline constexpr std::int64_t kMaxSupportedIndex = std::int64_t{1} << 31;

struct PrimePower {
  std::int64_t prime = 0;
  std::int32_t exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition. primes strictly increasing, exponents >= 1,
// empty factor list iff value == 1.
struct Factorization {
  std::int64_t value = 1;
  std::vector<PrimePower> factors;
};

// An unordered factor pair lo*hi = x with lo <= hi.
struct FactorPair {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

// Primes below 2^16, sieved once on first use. Enough trial divisors to
// factor anything below 2^32 outright and to seed the slow path above it.
const std::vector<std::int32_t>& small_primes();

// Deterministic trial division. Rejects x < 1.
Factorization factorize(std::int64_t x);

// Factorization of a.value * b.value (merge of the two factor lists).
// Rejects products that overflow the supported width.
Factorization product_factorization(const Factorization& a, const Factorization& b);

bool is_prime(std::int64_t x);
std::int64_t next_prime(std::int64_t x);  // smallest prime > x

std::int64_t divisor_count(std::int64_t x);
std::int64_t divisor_count(const Factorization& f);

// All divisors, sorted ascending.
std::vector<std::int64_t> divisors(const Factorization& f);

// All pairs lo*hi = x with lo <= hi, sorted ascending by lo.
// Exactly ceil(divisor_count(x)/2) pairs.
std::vector<FactorPair> divisor_pairs(std::int64_t x);
std::vector<FactorPair> divisor_pairs(const Factorization& f);

// The divisor-count bound x^((1+epsilon) ln 2 / ln ln x), natural logs.
// Requires x >= 16 so that ln ln x > 1; the bound is informational at small
// x (the underlying estimate is asymptotic) and callers compare, not assert.
double divisor_bound(std::int64_t x, double epsilon);

// Smallest-prime-factor table for batch factorization of x <= limit().
// Build once, read-only afterwards; safe to share across threads.
class SpfSieve {
 public:
  static constexpr std::int64_t kDefaultLimit = 100'000'000;

  explicit SpfSieve(std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  std::int64_t smallest_factor(std::int64_t x) const;  // x in [2, limit]
  Factorization factorize(std::int64_t x) const;       // x in [1, limit]
  std::int64_t divisor_count(std::int64_t x) const;

 private:
  std::int64_t limit_;
  std::vector<std::uint32_t> spf_;
};

std::int64_t isqrt64(std::int64_t x);  // floor(sqrt(x)), x >= 0

}  // namespace prodset
