#include "prodset/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "prodset/errors.hpp"
#include "prodset/tpairs.hpp"

namespace prodset {

const char* to_string(ParityClass c) {
  switch (c) {
    case ParityClass::ee: return "ee";
    case ParityClass::eo: return "eo";
    case ParityClass::oe: return "oe";
    case ParityClass::oo: return "oo";
  }
  return "?";
}

ParityClass parity_class(std::int64_t n, std::int64_t m) {
  const int idx = static_cast<int>(m % 2) * 2 + static_cast<int>(n % 2);
  return static_cast<ParityClass>(idx);
}

namespace {

// Per-m output of a worker: enough to rebuild the record stream and the
// summary without retaining every record in maxima-only mode.
struct SliceResult {
  std::vector<ScanRecord> records;        // all records, or within-m prefix maxima
  std::array<ParityStats, 4> by_class{};
  std::int64_t best_size = -1;
  std::int64_t best_n = 0;
};

SliceResult scan_slice(std::int64_t m, bool maxima_only) {
  SliceResult slice;
  if (!maxima_only) slice.records.reserve(static_cast<std::size_t>(m - 2));
  std::int64_t prefix_max = -1;
  for (std::int64_t n = 2; n < m; ++n) {
    const IntersectionBoundReport report = intersection_bound_report(n, m);
    if (!report.inequality_holds) {
      throw falsification_error("scan: intersection exceeds its pair bound at (n=" +
                                std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
    ScanRecord record{n, m, report.intersection_size, report.tau, parity_class(n, m),
                      report.equality_holds};
    auto& stats = slice.by_class[static_cast<std::size_t>(record.parity)];
    ++stats.pairs;
    if (record.equality) ++stats.equal;
    if (record.intersection_size > slice.best_size) {
      slice.best_size = record.intersection_size;
      slice.best_n = n;
    }
    if (maxima_only) {
      if (record.intersection_size > prefix_max) {
        prefix_max = record.intersection_size;
        slice.records.push_back(record);
      }
    } else {
      slice.records.push_back(record);
    }
  }
  return slice;
}

}  // namespace

ScanResult scan_pairs(const ScanOptions& options) {
  if (options.n_max < 3) throw std::invalid_argument("scan: n_max must be at least 3");
  if (options.n_max > kMaxSupportedIndex) {
    throw std::invalid_argument("scan: n_max exceeds supported width");
  }

  const std::int64_t n_max = options.n_max;
  unsigned thread_count = options.threads > 0
                              ? static_cast<unsigned>(options.threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  const auto slice_count = static_cast<std::size_t>(n_max - 2);  // m = 3 .. n_max
  thread_count = static_cast<unsigned>(
      std::min<std::size_t>(thread_count, slice_count));

  std::vector<SliceResult> slices(slice_count);
  std::atomic<std::int64_t> next_m{3};
  std::atomic<std::int64_t> done{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    for (;;) {
      const std::int64_t m = next_m.fetch_add(1);
      if (m > n_max) return;
      try {
        slices[static_cast<std::size_t>(m - 3)] = scan_slice(m, options.maxima_only);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
      done.fetch_add(1);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  if (options.progress_to_stderr) {
    while (static_cast<std::size_t>(done.load()) < slice_count) {
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error) break;
      }
      std::fprintf(stderr, "\rscan: %5.1f%%",
                   100.0 * static_cast<double>(done.load()) /
                       static_cast<double>(slice_count));
      std::fflush(stderr);
      std::this_thread::sleep_for(std::chrono::milliseconds(200));
    }
    std::fprintf(stderr, "\r");
    std::fflush(stderr);
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  // Deterministic merge in m order, independent of which worker ran what.
  ScanResult result;
  result.summary.n_max = n_max;
  std::int64_t running_max = -1;
  bool have_max = false;
  for (std::size_t s = 0; s < slice_count; ++s) {
    const SliceResult& slice = slices[s];
    for (std::size_t c = 0; c < 4; ++c) {
      result.summary.by_class[c].pairs += slice.by_class[c].pairs;
      result.summary.by_class[c].equal += slice.by_class[c].equal;
      result.summary.pairs_checked += slice.by_class[c].pairs;
    }
    if (options.maxima_only) {
      for (const ScanRecord& record : slice.records) {
        if (record.intersection_size > running_max) {
          running_max = record.intersection_size;
          result.records.push_back(record);
        }
      }
    } else {
      result.records.insert(result.records.end(), slice.records.begin(), slice.records.end());
    }
    if (!have_max || slice.best_size > result.summary.max_intersection) {
      have_max = true;
      result.summary.max_intersection = slice.best_size;
      result.summary.max_n = slice.best_n;
      result.summary.max_m = static_cast<std::int64_t>(s) + 3;
    }
  }
  return result;
}

}  // namespace prodset
