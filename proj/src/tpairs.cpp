#include "prodset/tpairs.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "prodset/product_set.hpp"

namespace prodset {

namespace {

void require_pair(std::int64_t n, std::int64_t m, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": requires n >= 2");
  if (n >= m) throw std::invalid_argument(std::string(who) + ": requires n < m");
  if (m > kMaxSupportedIndex) {
    throw std::invalid_argument(std::string(who) + ": m exceeds supported width");
  }
}

}  // namespace

std::vector<TPair> enumerate_tpairs(std::int64_t n, std::int64_t m) {
  require_pair(n, m, "enumerate_tpairs");
  // m^2 - n^2 factored as (m-n)(m+n); both halves stay below 2^32, so the
  // merged factorization never leaves the fast trial-division range.
  const Factorization fact =
      product_factorization(factorize(m - n), factorize(m + n));
  std::vector<TPair> pairs;
  for (const FactorPair& d : divisor_pairs(fact)) {
    if (d.lo + d.hi >= 2 * m) continue;
    if (d.hi >= d.lo + 2 * n) continue;
    pairs.push_back({n, m, d.lo, d.hi});
  }
  return pairs;
}

std::int64_t tau(std::int64_t n, std::int64_t m) {
  return static_cast<std::int64_t>(enumerate_tpairs(n, m).size());
}

std::optional<SolutionPair> solution_from_pair(const TPair& pair) {
  const std::int64_t offset_m_num = 2 * pair.m - pair.lo - pair.hi;
  const std::int64_t offset_n_num = 2 * pair.n + pair.lo - pair.hi;
  if (offset_m_num % 4 != 0 || offset_n_num % 4 != 0) return std::nullopt;
  const std::int64_t j = offset_m_num / 4;
  const std::int64_t i = offset_n_num / 4;
  if (i < 1 || i > pair.n / 2) return std::nullopt;
  if (j < 1 || j > pair.m / 2) return std::nullopt;
  const std::int64_t value = i * (pair.n - i);
  assert(value == j * (pair.m - j));
  return SolutionPair{i, j, value};
}

std::vector<std::int64_t> intersect_fast(std::int64_t n, std::int64_t m) {
  require_pair(n, m, "intersect_fast");
  std::vector<std::int64_t> values;
  for (const TPair& pair : enumerate_tpairs(n, m)) {
    if (auto sol = solution_from_pair(pair)) {
      assert(product_set_contains(n, sol->value) && product_set_contains(m, sol->value));
      values.push_back(sol->value);
    }
  }
  std::sort(values.begin(), values.end());
  // Distinct admissible pairs invert to distinct values; dedup would be a
  // no-op and a duplicate here would mean an implementation bug.
  assert(std::adjacent_find(values.begin(), values.end()) == values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

IntersectionBoundReport intersection_bound_report(std::int64_t n, std::int64_t m) {
  require_pair(n, m, "intersection_bound_report");
  IntersectionBoundReport report;
  report.n = n;
  report.m = m;
  std::int64_t defined = 0;
  std::int64_t pairs = 0;
  for (const TPair& pair : enumerate_tpairs(n, m)) {
    ++pairs;
    if (solution_from_pair(pair)) ++defined;
  }
  report.intersection_size = defined;
  report.tau = pairs;
  report.equality_expected = (m % 2 == 0) && (n % 2 == 1);
  report.inequality_holds = report.intersection_size <= report.tau;
  report.equality_holds = report.intersection_size == report.tau;
  return report;
}

}  // namespace prodset
