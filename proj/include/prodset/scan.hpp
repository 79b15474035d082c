#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace prodset {

// Parities of (m, n): first letter m, second letter n.
enum class ParityClass : int { ee = 0, eo = 1, oe = 2, oo = 3 };

const char* to_string(ParityClass c);
ParityClass parity_class(std::int64_t n, std::int64_t m);

struct ScanRecord {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t intersection_size = 0;
  std::int64_t tau = 0;
  ParityClass parity = ParityClass::ee;
  bool equality = false;  // intersection_size == tau
};

struct ParityStats {
  std::int64_t pairs = 0;
  std::int64_t equal = 0;
};

struct ScanSummary {
  std::int64_t n_max = 0;
  std::int64_t pairs_checked = 0;
  std::int64_t max_intersection = 0;
  std::int64_t max_n = 0;  // first pair achieving the max, in (m, n) order
  std::int64_t max_m = 0;
  std::array<ParityStats, 4> by_class{};  // indexed by ParityClass
};

struct ScanOptions {
  std::int64_t n_max = 0;         // scans all 2 <= n < m <= n_max; requires n_max >= 3
  int threads = 0;                // 0 = hardware concurrency
  bool maxima_only = false;       // keep only records breaking the running max
  bool progress_to_stderr = false;
};

struct ScanResult {
  std::vector<ScanRecord> records;  // sorted by (m, n)
  ScanSummary summary;
};

// Sweeps every pair, checking intersection_size <= tau for each; a violation
// throws falsification_error. The m-slices are distributed over a worker
// pool, and the merged output is identical for any thread count.
ScanResult scan_pairs(const ScanOptions& options);

}  // namespace prodset
