#include "prodset/sumproduct.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "prodset/errors.hpp"
#include "prodset/numtheory.hpp"
#include "prodset/tpairs.hpp"

namespace prodset {

namespace {

void require_base_set(const std::vector<std::int64_t>& a, std::size_t min_size, const char* who) {
  if (a.size() < min_size) {
    throw std::invalid_argument(std::string(who) + ": set is too small");
  }
  if (a.front() < 1) {
    throw std::invalid_argument(std::string(who) + ": elements must be positive");
  }
  // Pair sums are used as set indices downstream, so they must stay inside
  // the supported index width.
  if (a.back() > kMaxSupportedIndex / 2) {
    throw std::invalid_argument(std::string(who) + ": elements exceed the supported width");
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] <= a[i - 1]) {
      throw std::invalid_argument(std::string(who) + ": elements must be sorted and distinct");
    }
  }
}

}  // namespace

SumClassPartition partition_by_sum(const std::vector<std::int64_t>& a) {
  require_base_set(a, 2, "partition_by_sum");
  SumClassPartition partition;
  partition.base_set = a;
  for (std::int64_t x : a) {
    for (std::int64_t y : a) {
      partition.classes[x + y].emplace_back(x, y);
    }
  }
  return partition;
}

std::map<std::int64_t, std::vector<std::int64_t>> product_classes(
    const SumClassPartition& partition) {
  std::map<std::int64_t, std::vector<std::int64_t>> out;
  for (const auto& [sum, pairs] : partition.classes) {
    std::vector<std::int64_t> products;
    products.reserve(pairs.size());
    for (const auto& [x, y] : pairs) products.push_back(x * y);
    std::sort(products.begin(), products.end());
    products.erase(std::unique(products.begin(), products.end()), products.end());
    // Fixed sum: equal products force equal unordered pairs.
    assert(products.size() == (pairs.size() + 1) / 2);
    out.emplace(sum, std::move(products));
  }
  return out;
}

double hypergraph_bound(std::int64_t edge_count, std::int64_t min_edge_size,
                        std::int64_t pairwise_cap) {
  if (edge_count < 1 || min_edge_size < 1 || pairwise_cap < 0) {
    throw std::invalid_argument("hypergraph_bound: invalid parameters");
  }
  const double m = static_cast<double>(edge_count);
  const double r = static_cast<double>(min_edge_size);
  const double k = static_cast<double>(pairwise_cap);
  return m * r * r / (r + (m - 1.0) * k);
}

namespace {

std::int64_t sorted_intersection_size(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b) {
  std::int64_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

bool verify_covering_bound(const Hypergraph& h) {
  if (h.edges.empty()) throw std::invalid_argument("verify_covering_bound: no edges");
  for (const auto& edge : h.edges) {
    if (static_cast<std::int64_t>(edge.size()) < h.edge_min_size) {
      throw std::invalid_argument("verify_covering_bound: edge below declared minimum size");
    }
    if (!std::is_sorted(edge.begin(), edge.end()) ||
        std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw std::invalid_argument("verify_covering_bound: edges must be sorted vertex sets");
    }
    if (!std::includes(h.vertices.begin(), h.vertices.end(), edge.begin(), edge.end())) {
      throw std::invalid_argument("verify_covering_bound: edge uses unknown vertices");
    }
  }

  const std::int64_t edge_count = static_cast<std::int64_t>(h.edges.size());
  std::int64_t min_size = static_cast<std::int64_t>(h.edges.front().size());
  for (const auto& edge : h.edges) {
    min_size = std::min<std::int64_t>(min_size, static_cast<std::int64_t>(edge.size()));
  }
  std::int64_t max_overlap = 0;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
      const std::int64_t overlap = sorted_intersection_size(h.edges[i], h.edges[j]);
      if (overlap > h.pairwise_cap) {
        throw std::invalid_argument("verify_covering_bound: pairwise cap violated");
      }
      max_overlap = std::max(max_overlap, overlap);
    }
  }

  std::vector<std::int64_t> touched;
  for (const auto& edge : h.edges) touched.insert(touched.end(), edge.begin(), edge.end());
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  // |V| >= m R^2 / (R + (m-1) kappa), cross-multiplied so the comparison
  // stays exact.
  const auto lhs = static_cast<unsigned __int128>(touched.size()) *
                   (static_cast<unsigned __int128>(min_size) +
                    static_cast<unsigned __int128>(edge_count - 1) *
                        static_cast<unsigned __int128>(max_overlap));
  const auto rhs = static_cast<unsigned __int128>(edge_count) *
                   static_cast<unsigned __int128>(min_size) *
                   static_cast<unsigned __int128>(min_size);
  return lhs >= rhs;
}

SumProductReport conditional_experiment(const std::vector<std::int64_t>& a, double c) {
  require_base_set(a, 4, "conditional_experiment");
  if (!(c > 0.0) || !(c < 1.0)) {
    throw std::invalid_argument("conditional_experiment: c must lie in (0, 1)");
  }

  const SumClassPartition partition = partition_by_sum(a);
  const std::int64_t n = static_cast<std::int64_t>(a.size());

  SumProductReport report;
  report.set_size = n;
  report.c = c;
  report.sumset_size = static_cast<std::int64_t>(partition.classes.size());

  std::unordered_set<std::int64_t> products;
  products.reserve(a.size() * a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) products.insert(a[i] * a[j]);
  }
  report.productset_size = static_cast<std::int64_t>(products.size());

  // ln ln n needs n > e^e; everything threshold-derived is left unset below
  // n = 16 instead of extrapolating.
  report.thresholds_defined = n >= 16;
  if (!report.thresholds_defined) return report;

  const double nd = static_cast<double>(n);
  const double lnln = std::log(std::log(nd));
  const double heavy_exponent = 2.0 / 3.0 - 2.0 / lnln;
  const double pairwise_exponent = 2.0 / std::pow(lnln, 1.0 - c);
  const double target_exponent = 4.0 / 3.0 - 3.0 / std::pow(lnln, 1.0 - c);
  const double heavy_threshold = 0.5 * std::pow(nd, heavy_exponent);
  report.heavy_exponent = heavy_exponent;
  report.pairwise_exponent = pairwise_exponent;
  report.target_exponent = target_exponent;
  report.heavy_threshold = heavy_threshold;

  const auto all_products = product_classes(partition);
  std::vector<std::int64_t> heavy_keys;
  std::int64_t min_products = 0;
  for (const auto& [sum, pairs] : partition.classes) {
    if (static_cast<double>(pairs.size()) > heavy_threshold) {
      heavy_keys.push_back(sum);
      const auto size = static_cast<std::int64_t>(all_products.at(sum).size());
      min_products = heavy_keys.size() == 1 ? size : std::min(min_products, size);
    }
  }
  report.heavy_class_count = static_cast<std::int64_t>(heavy_keys.size());

  if (heavy_keys.empty()) {
    report.max_pairwise_product_intersection = 0;
    const double max_side = static_cast<double>(
        std::max(report.sumset_size, report.productset_size));
    report.conclusion_met = max_side >= std::pow(nd, target_exponent);
    return report;
  }
  report.min_heavy_class_products = min_products;

  // Invert value -> heavy classes containing it; only classes sharing a
  // value contribute to pairwise intersections, which keeps this pass near
  // linear in the number of stored products.
  std::map<std::int64_t, std::vector<std::int64_t>> classes_of_value;
  for (std::int64_t key : heavy_keys) {
    for (std::int64_t v : all_products.at(key)) classes_of_value[v].push_back(key);
  }
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>> shared;
  for (const auto& [value, keys] : classes_of_value) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      for (std::size_t j = i + 1; j < keys.size(); ++j) {
        shared[{keys[i], keys[j]}].push_back(value);
      }
    }
  }
  std::int64_t max_pairwise = 0;
  for (const auto& [key_pair, values] : shared) {
    max_pairwise = std::max(max_pairwise, static_cast<std::int64_t>(values.size()));
    // Shared products of the classes at sums k < j must land in the exact
    // intersection of A_k and A_j.
    const auto common = intersect_fast(key_pair.first, key_pair.second);
    for (std::int64_t v : values) {
      if (!std::binary_search(common.begin(), common.end(), v)) {
        throw falsification_error(
            "conditional_experiment: shared product escapes the set intersection");
      }
    }
  }
  report.max_pairwise_product_intersection = max_pairwise;
  report.covering_bound = hypergraph_bound(*report.heavy_class_count, min_products, max_pairwise);

  const double max_side =
      static_cast<double>(std::max(report.sumset_size, report.productset_size));
  report.conclusion_met = max_side >= std::pow(nd, target_exponent);
  return report;
}

}  // namespace prodset
