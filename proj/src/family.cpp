#include "prodset/family.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

#include "prodset/errors.hpp"
#include "prodset/product_set.hpp"
#include "prodset/tpairs.hpp"

namespace prodset {

namespace {

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (result > kMaxSupportedIndex / base) {
      throw std::overflow_error("construct_pair: parameters overflow the supported width");
    }
    result *= base;
  }
  return result;
}

// The defined admissible pairs of a constructed (n, m) must be exactly the
// predicted ones, in the same order, and the brute-force oracle must agree
// whenever m is small enough to run it.
void self_validate(const FamilySpec& spec) {
  const std::vector<FactorPair> predicted = predicted_pairs(spec);
  std::vector<FactorPair> defined;
  std::vector<std::int64_t> values;
  for (const TPair& pair : enumerate_tpairs(spec.n, spec.m)) {
    if (auto sol = solution_from_pair(pair)) {
      defined.push_back({pair.lo, pair.hi});
      values.push_back(sol->value);
    }
  }
  std::vector<FactorPair> expected = predicted;
  std::sort(expected.begin(), expected.end(),
            [](const FactorPair& a, const FactorPair& b) { return a.lo < b.lo; });
  if (defined != expected) {
    throw falsification_error("construct_pair: defined pairs differ from the predicted ones");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (static_cast<std::int64_t>(values.size()) != spec.target_size) {
    throw falsification_error("construct_pair: intersection size differs from target");
  }
  if (spec.m <= kFamilyOracleCap) {
    if (intersect_bruteforce(spec.n, spec.m) != values) {
      throw falsification_error("construct_pair: brute-force oracle disagrees with fast path");
    }
  }
}

}  // namespace

FamilySpec construct_pair(std::int64_t target_size, std::int64_t prime,
                          std::optional<std::int64_t> pow2_exponent) {
  if (target_size < 1) throw std::invalid_argument("construct_pair: target size must be >= 1");
  if (prime < 3 || prime % 2 == 0 || !is_prime(prime)) {
    throw std::invalid_argument("construct_pair: p must be an odd prime >= 3");
  }
  const std::int64_t prime_power = checked_pow(prime, target_size);  // p^s
  std::int64_t alpha;
  if (pow2_exponent) {
    alpha = *pow2_exponent;
    if (alpha < 1 || alpha >= 63 || (std::int64_t{1} << alpha) <= prime_power) {
      throw std::invalid_argument("construct_pair: alpha must satisfy 2^alpha > p^s");
    }
  } else {
    // Minimal exponent with 2^alpha > p^s. p is odd, so p^s is never a
    // power of two and bit_width gives the exact answer.
    alpha = std::bit_width(static_cast<std::uint64_t>(prime_power));
  }
  const auto wide_m = (static_cast<unsigned __int128>(1) << alpha) *
                          static_cast<unsigned __int128>(prime_power) +
                      1;
  if (wide_m > static_cast<unsigned __int128>(kMaxSupportedIndex)) {
    throw std::overflow_error("construct_pair: m overflows the supported width");
  }
  FamilySpec spec;
  spec.target_size = target_size;
  spec.prime = prime;
  spec.pow2_exponent = alpha;
  spec.m = static_cast<std::int64_t>(wide_m);
  spec.n = spec.m - 2;
  assert((spec.m - spec.n) * (spec.m + spec.n) ==
         (std::int64_t{1} << (alpha + 2)) * prime_power);
  self_validate(spec);
  return spec;
}

std::vector<FactorPair> predicted_pairs(const FamilySpec& spec) {
  if (spec.target_size < 1 || spec.prime < 3) {
    throw std::invalid_argument("predicted_pairs: invalid family spec");
  }
  std::vector<FactorPair> pairs;
  pairs.reserve(static_cast<std::size_t>(spec.target_size));
  std::int64_t lo = 2;  // 2 * p^(s-i), walked down from i = 0
  for (std::int64_t i = 0; i < spec.target_size; ++i) lo *= spec.prime;
  std::int64_t hi = std::int64_t{1} << (spec.pow2_exponent + 1);  // 2^(alpha+1) * p^i
  for (std::int64_t i = 0; i < spec.target_size; ++i) {
    pairs.push_back({lo, hi});
    lo /= spec.prime;
    hi *= spec.prime;
  }
  return pairs;
}

std::vector<FamilySpec> construct_sequence(std::int64_t target_size, std::int64_t count) {
  if (count < 1) throw std::invalid_argument("construct_sequence: count must be >= 1");
  std::vector<FamilySpec> specs;
  specs.reserve(static_cast<std::size_t>(count));
  std::int64_t p = 3;
  for (std::int64_t i = 0; i < count; ++i) {
    specs.push_back(construct_pair(target_size, p));
    p = next_prime(p);
  }
  return specs;
}

}  // namespace prodset
