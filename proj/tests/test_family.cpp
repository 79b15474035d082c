#include "prodset/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "prodset/product_set.hpp"
#include "prodset/tpairs.hpp"

using namespace prodset;

TEST_CASE("construct_pair: fixed specs") {
  const FamilySpec a = construct_pair(1, 3, 2);
  CHECK(a.n == 11);
  CHECK(a.m == 13);
  CHECK(intersect_fast(a.n, a.m) == std::vector<std::int64_t>{30});

  const FamilySpec b = construct_pair(2, 3, 4);
  CHECK(b.n == 143);
  CHECK(b.m == 145);
  CHECK((b.m - b.n) * (b.m + b.n) == 576);
  CHECK(intersect_fast(b.n, b.m) == std::vector<std::int64_t>{4606, 5100});
  CHECK(intersect_bruteforce(b.n, b.m) == std::vector<std::int64_t>{4606, 5100});
}

TEST_CASE("construct_pair: minimal alpha selection") {
  CHECK(construct_pair(1, 3).pow2_exponent == 2);   // 4 > 3
  CHECK(construct_pair(1, 5).pow2_exponent == 3);   // 8 > 5
  CHECK(construct_pair(2, 3).pow2_exponent == 4);   // 16 > 9
  CHECK(construct_pair(3, 3).pow2_exponent == 5);   // 32 > 27
  const FamilySpec s3 = construct_pair(3, 3);
  CHECK(s3.m == 865);
  CHECK(s3.n == 863);
  CHECK(static_cast<std::int64_t>(intersect_bruteforce(863, 865).size()) == 3);
}

TEST_CASE("construct_pair: rejects bad parameters") {
  CHECK_THROWS_AS(construct_pair(1, 3, 1), std::invalid_argument);   // 2 > 3 fails
  CHECK_THROWS_AS(construct_pair(1, 4), std::invalid_argument);      // even
  CHECK_THROWS_AS(construct_pair(1, 9), std::invalid_argument);      // composite
  CHECK_THROWS_AS(construct_pair(1, 2), std::invalid_argument);      // p >= 3
  CHECK_THROWS_AS(construct_pair(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(construct_pair(8, 101), std::overflow_error);      // m blows past the width
}

TEST_CASE("predicted_pairs: fixed values and the excluded boundary pair") {
  const FamilySpec a = construct_pair(1, 3, 2);
  CHECK(predicted_pairs(a) == std::vector<FactorPair>{{6, 8}});

  const FamilySpec b = construct_pair(2, 3, 4);
  CHECK(predicted_pairs(b) == std::vector<FactorPair>{{18, 32}, {6, 96}});

  // The i = s continuation of the pattern is (2, 2^(alpha+1) p^s); its sum
  // is exactly 2m, so it is not admissible and inverts to offset_m = 0.
  const std::int64_t boundary_hi = (std::int64_t{1} << (a.pow2_exponent + 1)) * 3;
  CHECK(boundary_hi == 24);
  CHECK(2 + boundary_hi == 2 * a.m);
  CHECK(!solution_from_pair(TPair{a.n, a.m, 2, boundary_hi}).has_value());
}

TEST_CASE("predicted_pairs: exactly the defined admissible pairs, any spec") {
  for (std::int64_t s = 1; s <= 3; ++s) {
    for (std::int64_t p : {3, 5, 7, 11}) {
      const FamilySpec spec = construct_pair(s, p);
      CAPTURE(spec.m);
      std::int64_t prime_power = 1;
      for (std::int64_t i = 0; i < s; ++i) prime_power *= p;
      CHECK((spec.m - spec.n) * (spec.m + spec.n) ==
            (std::int64_t{1} << (spec.pow2_exponent + 2)) * prime_power);

      auto predicted = predicted_pairs(spec);
      std::sort(predicted.begin(), predicted.end(),
                [](const FactorPair& x, const FactorPair& y) { return x.lo < y.lo; });
      std::vector<FactorPair> defined;
      std::vector<std::int64_t> values;
      for (const TPair& t : enumerate_tpairs(spec.n, spec.m)) {
        if (auto sol = solution_from_pair(t)) {
          defined.push_back({t.lo, t.hi});
          values.push_back(sol->value);
        }
      }
      CHECK(defined == predicted);
      std::sort(values.begin(), values.end());
      CHECK(std::adjacent_find(values.begin(), values.end()) == values.end());
      CHECK(static_cast<std::int64_t>(values.size()) == s);
    }
  }
}

TEST_CASE("construct_sequence: fixed values") {
  const auto one = construct_sequence(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].n == 11);
  CHECK(one[0].m == 13);

  const auto two = construct_sequence(1, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].prime == 3);
  CHECK(two[1].prime == 5);
  CHECK(two[1].pow2_exponent == 3);
  CHECK(two[1].m == 41);
  CHECK(two[1].n == 39);
  CHECK(intersect_bruteforce(39, 41) == std::vector<std::int64_t>{378});
}

TEST_CASE("construct_sequence: strictly increasing pairs, exact sizes") {
  const auto specs = construct_sequence(2, 5);
  REQUIRE(specs.size() == 5);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CHECK(static_cast<std::int64_t>(intersect_fast(specs[i].n, specs[i].m).size()) == 2);
    if (i > 0) {
      CHECK(specs[i - 1].prime < specs[i].prime);
      CHECK(specs[i - 1].m < specs[i].n);
    }
  }
  CHECK_THROWS_AS(construct_sequence(1, 0), std::invalid_argument);
}
