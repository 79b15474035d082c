#include "prodset/product_set.hpp"

#include <cassert>
#include <stdexcept>
#include <unordered_set>

#include "prodset/numtheory.hpp"

namespace prodset {

namespace {

void require_index(std::int64_t k, const char* who) {
  if (k < 2) throw std::invalid_argument(std::string(who) + ": index must be at least 2");
  if (k > kMaxSupportedIndex) {
    throw std::invalid_argument(std::string(who) + ": index exceeds supported width");
  }
}

void require_ordered(std::int64_t n, std::int64_t m, const char* who) {
  require_index(n, who);
  require_index(m, who);
  if (n >= m) throw std::invalid_argument(std::string(who) + ": requires n < m");
}

}  // namespace

ProductSet product_set(std::int64_t k, std::size_t cap) {
  require_index(k, "product_set");
  const auto size = static_cast<std::size_t>(k / 2);
  if (size > cap) {
    throw std::length_error("product_set: set exceeds the materialization cap");
  }
  ProductSet set;
  set.k = k;
  set.values.reserve(size);
  for (std::int64_t r = 1; r <= k / 2; ++r) {
    const std::int64_t v = r * (k - r);
    // r(k-r) is strictly increasing for r <= k/2, so no dedup pass is needed.
    assert(set.values.empty() || set.values.back() < v);
    set.values.push_back(v);
  }
  return set;
}

bool product_set_contains(std::int64_t k, std::int64_t v) {
  require_index(k, "product_set_contains");
  if (v < 1 || v > (k * k) / 4) return false;
  const std::int64_t disc = k * k - 4 * v;
  const std::int64_t s = isqrt64(disc);
  if (s * s != disc) return false;
  if ((k - s) % 2 != 0) return false;
  return s <= k - 2;  // s = k - 2r, so r >= 1
}

std::vector<std::int64_t> intersect_bruteforce(std::int64_t n, std::int64_t m, std::size_t cap) {
  require_ordered(n, m, "intersect_bruteforce");
  if (static_cast<std::size_t>(n / 2) > cap) {
    throw std::length_error("intersect_bruteforce: smaller set exceeds the materialization cap");
  }
  std::unordered_set<std::int64_t> smaller;
  smaller.reserve(static_cast<std::size_t>(n / 2) * 2);
  for (std::int64_t r = 1; r <= n / 2; ++r) smaller.insert(r * (n - r));

  std::vector<std::int64_t> common;
  for (std::int64_t r = 1; r <= m / 2; ++r) {
    const std::int64_t v = r * (m - r);
    if (smaller.contains(v)) common.push_back(v);  // increasing in r, so sorted
  }
  return common;
}

}  // namespace prodset
