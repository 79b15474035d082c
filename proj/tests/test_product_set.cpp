#include "prodset/product_set.hpp"

#include <set>
#include <stdexcept>

#include "doctest.h"
#include "prodset/numtheory.hpp"
#include "prodset/rng.hpp"

using namespace prodset;

TEST_CASE("product_set: fixed values") {
  CHECK(product_set(2).values == std::vector<std::int64_t>{1});
  CHECK(product_set(6).values == std::vector<std::int64_t>{5, 8, 9});
  CHECK(product_set(13).values == std::vector<std::int64_t>{12, 22, 30, 36, 40, 42});
}

TEST_CASE("product_set: rejects bad indices") {
  CHECK_THROWS_AS(product_set(1), std::invalid_argument);
  CHECK_THROWS_AS(product_set(0), std::invalid_argument);
  CHECK_THROWS_AS(product_set(-5), std::invalid_argument);
  CHECK_THROWS_AS(product_set(kMaxSupportedIndex + 1), std::invalid_argument);
  CHECK_THROWS_AS(product_set(1000, 10), std::length_error);
}

TEST_CASE("product_set: size, min, max and monotonicity") {
  for (std::int64_t k = 2; k <= 3000; ++k) {
    const ProductSet set = product_set(k);
    CHECK(static_cast<std::int64_t>(set.values.size()) == k / 2);
    CHECK(set.values.front() == k - 1);
    CHECK(set.values.back() == (k * k) / 4);
    for (std::size_t i = 1; i < set.values.size(); ++i) {
      CHECK(set.values[i - 1] < set.values[i]);
    }
  }
}

TEST_CASE("product_set: size, min, max over the full 1e5 range") {
  std::int64_t bad = 0;
  for (std::int64_t k = 2; k <= 100000; ++k) {
    const ProductSet set = product_set(k);
    if (static_cast<std::int64_t>(set.values.size()) != k / 2 ||
        set.values.front() != k - 1 || set.values.back() != (k * k) / 4) {
      ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("product_set: half-range enumeration equals full enumeration") {
  SplitMix64 rng(0x5eed0102);
  for (int i = 0; i < 50; ++i) {
    const std::int64_t k = rng.range(2, 2000);
    std::set<std::int64_t> full;
    for (std::int64_t r = 1; r <= k - 1; ++r) full.insert(r * (k - r));
    const ProductSet set = product_set(k);
    CHECK(std::vector<std::int64_t>(full.begin(), full.end()) == set.values);
  }
}

TEST_CASE("product_set_contains matches materialized membership") {
  for (std::int64_t k : {2, 6, 13, 100, 101}) {
    const ProductSet set = product_set(k);
    std::set<std::int64_t> members(set.values.begin(), set.values.end());
    for (std::int64_t v = 0; v <= (k * k) / 4 + 2; ++v) {
      CAPTURE(k);
      CAPTURE(v);
      CHECK(product_set_contains(k, v) == (members.count(v) > 0));
    }
  }
  // Large index: spot membership without materializing.
  const std::int64_t k = 2'000'000'001;
  CHECK(product_set_contains(k, k - 1));           // r = 1
  CHECK(product_set_contains(k, 2 * (k - 2)));     // r = 2
  CHECK(!product_set_contains(k, k));              // between r=1 and r=2 values
  CHECK(product_set_contains(k, (k / 2) * (k - k / 2)));
}

TEST_CASE("intersect_bruteforce: fixed values") {
  CHECK(intersect_bruteforce(5, 6).empty());
  CHECK(intersect_bruteforce(6, 9) == std::vector<std::int64_t>{8});
  CHECK(intersect_bruteforce(11, 13) == std::vector<std::int64_t>{30});
}

TEST_CASE("intersect_bruteforce: argument checks") {
  CHECK_THROWS_AS(intersect_bruteforce(13, 11), std::invalid_argument);
  CHECK_THROWS_AS(intersect_bruteforce(6, 6), std::invalid_argument);
  CHECK_THROWS_AS(intersect_bruteforce(1, 5), std::invalid_argument);
}

TEST_CASE("intersect_bruteforce: result is contained in both sets") {
  SplitMix64 rng(0x5eed0103);
  for (int i = 0; i < 40; ++i) {
    const std::int64_t n = rng.range(2, 400);
    const std::int64_t m = rng.range(n + 1, 500);
    const auto common = intersect_bruteforce(n, m);
    for (std::int64_t v : common) {
      CHECK(product_set_contains(n, v));
      CHECK(product_set_contains(m, v));
    }
    for (std::size_t j = 1; j < common.size(); ++j) CHECK(common[j - 1] < common[j]);
  }
}
