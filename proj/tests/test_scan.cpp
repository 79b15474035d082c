#include "prodset/scan.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace prodset;

TEST_CASE("parity_class labeling") {
  CHECK(parity_class(5, 6) == ParityClass::eo);   // m even, n odd
  CHECK(parity_class(6, 9) == ParityClass::oe);
  CHECK(parity_class(11, 13) == ParityClass::oo);
  CHECK(parity_class(2, 4) == ParityClass::ee);
  CHECK(to_string(ParityClass::eo) == std::string("eo"));
}

TEST_CASE("scan_pairs: tiny ranges") {
  const auto r3 = scan_pairs({.n_max = 3});
  REQUIRE(r3.records.size() == 1);
  CHECK(r3.records[0].n == 2);
  CHECK(r3.records[0].m == 3);
  CHECK(r3.records[0].intersection_size == 0);  // A_2 = {1}, A_3 = {2}
  CHECK(r3.summary.pairs_checked == 1);
  CHECK(r3.summary.max_intersection == 0);

  const auto r13 = scan_pairs({.n_max = 13});
  CHECK(r13.summary.max_intersection >= 1);
  CHECK(r13.summary.pairs_checked == 66);  // C(12, 2)
}

TEST_CASE("scan_pairs: rejects bad ranges") {
  CHECK_THROWS_AS(scan_pairs({.n_max = 2}), std::invalid_argument);
  CHECK_THROWS_AS(scan_pairs({.n_max = 0}), std::invalid_argument);
}

TEST_CASE("scan_pairs: records sorted by (m, n) with coherent fields") {
  const auto result = scan_pairs({.n_max = 60});
  std::int64_t expected = 0;
  for (std::int64_t m = 3; m <= 60; ++m) expected += m - 2;
  CHECK(result.summary.pairs_checked == expected);
  CHECK(static_cast<std::int64_t>(result.records.size()) == expected);
  for (std::size_t i = 1; i < result.records.size(); ++i) {
    const auto& prev = result.records[i - 1];
    const auto& cur = result.records[i];
    CHECK((prev.m < cur.m || (prev.m == cur.m && prev.n < cur.n)));
  }
  for (const auto& record : result.records) {
    CHECK(record.intersection_size <= record.tau);
    CHECK(record.equality == (record.intersection_size == record.tau));
    CHECK(record.parity == parity_class(record.n, record.m));
  }
}

TEST_CASE("scan_pairs: the m-even n-odd class shows full equality") {
  const auto result = scan_pairs({.n_max = 100});
  const auto& eo = result.summary.by_class[static_cast<std::size_t>(ParityClass::eo)];
  CHECK(eo.pairs > 0);
  CHECK(eo.equal == eo.pairs);
}

TEST_CASE("scan_pairs: identical output at different thread counts") {
  ScanOptions one{.n_max = 200, .threads = 1};
  ScanOptions many{.n_max = 200, .threads = 8};
  const auto a = scan_pairs(one);
  const auto b = scan_pairs(many);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].n == b.records[i].n);
    CHECK(a.records[i].m == b.records[i].m);
    CHECK(a.records[i].intersection_size == b.records[i].intersection_size);
    CHECK(a.records[i].tau == b.records[i].tau);
  }
  CHECK(a.summary.max_intersection == b.summary.max_intersection);
  CHECK(a.summary.max_n == b.summary.max_n);
  CHECK(a.summary.max_m == b.summary.max_m);
}

TEST_CASE("scan_pairs: maxima-only stream is the prefix-maximum subsequence") {
  const auto all = scan_pairs({.n_max = 150});
  const auto maxima = scan_pairs({.n_max = 150, .maxima_only = true});
  std::vector<ScanRecord> expected;
  std::int64_t running = -1;
  for (const auto& record : all.records) {
    if (record.intersection_size > running) {
      running = record.intersection_size;
      expected.push_back(record);
    }
  }
  REQUIRE(maxima.records.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(maxima.records[i].n == expected[i].n);
    CHECK(maxima.records[i].m == expected[i].m);
    CHECK(maxima.records[i].intersection_size == expected[i].intersection_size);
  }
  CHECK(maxima.summary.pairs_checked == all.summary.pairs_checked);
  CHECK(maxima.summary.max_intersection == all.summary.max_intersection);
}
