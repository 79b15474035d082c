#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace prodset {

// Partition of A x A by pair sum: classes[k] holds every ordered pair
// (a, a') with a + a' = k. Sum of class sizes is |A|^2; the number of
// classes is |A+A|.
struct SumClassPartition {
  std::vector<std::int64_t> base_set;  // sorted distinct positive integers
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>> classes;
};

// Requires |a| >= 2, elements sorted, strictly increasing, all >= 1.
SumClassPartition partition_by_sum(const std::vector<std::int64_t>& a);

// For each sum k, the sorted distinct products a*a' over pairs in the class.
// With the sum fixed, equal products force equal unordered pairs, so each
// class has exactly ceil(|B_k|/2) products, and every product lies in A_k.
std::map<std::int64_t, std::vector<std::int64_t>> product_classes(const SumClassPartition& partition);

// Hypergraph with a declared minimum edge size and pairwise intersection cap.
// Edges are sorted distinct vertex lists drawn from `vertices`.
struct Hypergraph {
  std::vector<std::int64_t> vertices;
  std::vector<std::vector<std::int64_t>> edges;
  std::int64_t edge_min_size = 1;  // every edge has at least this many vertices
  std::int64_t pairwise_cap = 0;   // |e intersect e'| <= this for distinct e, e'
};

// Covering lower bound: a hypergraph with edge_count edges, each of size at
// least min_edge_size, whose distinct edges pairwise intersect in at most
// pairwise_cap vertices, touches at least
//   edge_count * min_edge_size^2 / (min_edge_size + (edge_count-1) * pairwise_cap)
// vertices.
double hypergraph_bound(std::int64_t edge_count, std::int64_t min_edge_size,
                        std::int64_t pairwise_cap);

// Checks the covering bound against h, with the minimum edge size and the
// pairwise cap measured from the edges themselves (the declared fields are
// validated first). The comparison is exact in integer arithmetic. A false
// return is a falsification event; callers treat it as a test failure.
bool verify_covering_bound(const Hypergraph& h);

// Everything the accounting experiment measures for a finite set A.
// Threshold-derived fields need ln ln |A| > 0, so they are reported only for
// |A| >= 16; below that they stay unset and no conclusion is drawn.
// All quantities are data; nothing asymptotic is asserted.
struct SumProductReport {
  std::int64_t set_size = 0;  // |A|
  std::int64_t sumset_size = 0;
  std::int64_t productset_size = 0;
  double c = 0.0;
  bool thresholds_defined = false;

  // A sum class is heavy when it has more than heavy_threshold ordered pairs;
  // heavy_threshold = 0.5 * |A|^heavy_exponent with heavy_exponent the first
  // exponent below. The pairwise exponent is the variant with the (1-c) power
  // on ln ln |A|; both are reported for comparison.
  std::optional<double> heavy_exponent;        // 2/3 - 2/(ln ln |A|)
  std::optional<double> pairwise_exponent;     // 2/(ln ln |A|)^(1-c)
  std::optional<double> heavy_threshold;
  std::optional<std::int64_t> heavy_class_count;
  std::optional<std::int64_t> min_heavy_class_products;  // min |C_k| over heavy k
  std::optional<std::int64_t> max_pairwise_product_intersection;
  std::optional<double> covering_bound;  // hypergraph_bound over the heavy product classes
  std::optional<double> target_exponent;  // 4/3 - 3/(ln ln |A|)^(1-c)
  std::optional<bool> conclusion_met;  // max(|A+A|, |AA|) >= |A|^target_exponent
};

// Runs the whole accounting pass on A. Requires |A| >= 4, sorted distinct
// elements >= 1, and 0 < c < 1. Every product shared by two heavy classes is
// cross-checked against intersect_fast; a value escaping that containment
// throws falsification_error.
SumProductReport conditional_experiment(const std::vector<std::int64_t>& a, double c);

}  // namespace prodset
