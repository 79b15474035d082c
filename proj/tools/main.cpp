// prodset: command-line driver for product-set intersections, the exact
// family construction, divisor-bound sweeps, and the sum-product accounting
// experiment.
//
// Exit codes: 0 success, 2 usage or input error, 3 falsification (an oracle
// mismatch or a violated bound).

#include <algorithm>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "prodset/errors.hpp"
#include "prodset/family.hpp"
#include "prodset/numtheory.hpp"
#include "prodset/product_set.hpp"
#include "prodset/rng.hpp"
#include "prodset/scan.hpp"
#include "prodset/sumproduct.hpp"
#include "prodset/tpairs.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;
using std::int64_t;

struct GlobalOptions {
  std::string format = "table";
  int threads = 0;
  std::uint64_t seed = 1;
};

void emit_json(const std::string& command, const json& params, const json& result) {
  const json envelope{
      {"command", command}, {"params", params}, {"result", result}, {"version", kVersion}};
  std::cout << envelope.dump(2) << "\n";
}

std::string join(const std::vector<int64_t>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// ---------------------------------------------------------------- intersect

int run_intersect(const GlobalOptions& global, int64_t n, int64_t m,
                  const std::string& method) {
  std::optional<std::vector<int64_t>> fast;
  std::optional<std::vector<int64_t>> brute;
  if (method == "fast" || method == "both") fast = prodset::intersect_fast(n, m);
  if (method == "brute" || method == "both") brute = prodset::intersect_bruteforce(n, m);
  if (method == "both" && *fast != *brute) {
    throw prodset::falsification_error(
        "intersect: fast path disagrees with brute force at (n=" + std::to_string(n) +
        ", m=" + std::to_string(m) + "): fast={" + join(*fast, ",") + "} brute={" +
        join(*brute, ",") + "}");
  }
  const std::vector<int64_t>& values = fast ? *fast : *brute;

  if (global.format == "json") {
    json result{{"n", n},
                {"m", m},
                {"method", method},
                {"size", static_cast<int64_t>(values.size())},
                {"values", values}};
    if (method == "both") result["match"] = true;
    emit_json("intersect", {{"n", n}, {"m", m}, {"method", method}}, result);
  } else if (global.format == "csv") {
    std::printf("n,m,method,size,values\n");
    std::printf("%" PRId64 ",%" PRId64 ",%s,%zu,%s\n", n, m, method.c_str(), values.size(),
                join(values, ";").c_str());
  } else {
    std::printf("intersect n=%" PRId64 " m=%" PRId64 " method=%s\n", n, m, method.c_str());
    std::printf("size: %zu\n", values.size());
    std::printf("values: %s\n", values.empty() ? "none" : join(values, " ").c_str());
    if (method == "both") std::printf("match: true\n");
  }
  return 0;
}

// ---------------------------------------------------------------------- tau

int run_tau(const GlobalOptions& global, int64_t n, int64_t m) {
  const auto pairs = prodset::enumerate_tpairs(n, m);

  if (global.format == "json") {
    json pair_list = json::array();
    for (const auto& pair : pairs) {
      json entry{{"lo", pair.lo}, {"hi", pair.hi}};
      if (auto sol = prodset::solution_from_pair(pair)) {
        entry["solution"] = {{"offset_n", sol->offset_n},
                             {"offset_m", sol->offset_m},
                             {"value", sol->value}};
      } else {
        entry["solution"] = nullptr;
      }
      pair_list.push_back(entry);
    }
    emit_json("tau", {{"n", n}, {"m", m}},
              {{"n", n}, {"m", m}, {"tau", static_cast<int64_t>(pairs.size())},
               {"pairs", pair_list}});
  } else if (global.format == "csv") {
    std::printf("n,m,lo,hi,defined,offset_n,offset_m,value\n");
    for (const auto& pair : pairs) {
      if (auto sol = prodset::solution_from_pair(pair)) {
        std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64 ",true,%" PRId64
                    ",%" PRId64 ",%" PRId64 "\n",
                    n, m, pair.lo, pair.hi, sol->offset_n, sol->offset_m, sol->value);
      } else {
        std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64 ",false,,,\n", n, m,
                    pair.lo, pair.hi);
      }
    }
  } else {
    std::printf("tau(n=%" PRId64 ", m=%" PRId64 ") = %zu\n", n, m, pairs.size());
    if (!pairs.empty()) {
      std::printf("%10s %10s %12s %12s %14s\n", "lo", "hi", "offset_n", "offset_m", "value");
      for (const auto& pair : pairs) {
        if (auto sol = prodset::solution_from_pair(pair)) {
          std::printf("%10" PRId64 " %10" PRId64 " %12" PRId64 " %12" PRId64 " %14" PRId64
                      "\n",
                      pair.lo, pair.hi, sol->offset_n, sol->offset_m, sol->value);
        } else {
          std::printf("%10" PRId64 " %10" PRId64 " %12s %12s %14s\n", pair.lo, pair.hi, "-",
                      "-", "-");
        }
      }
    }
  }
  return 0;
}

// --------------------------------------------------------------------- scan

void print_scan_summary_table(const prodset::ScanSummary& summary) {
  std::printf("pairs checked    : %" PRId64 "\n", summary.pairs_checked);
  std::printf("max intersection : %" PRId64 "  (first at n=%" PRId64 ", m=%" PRId64 ")\n",
              summary.max_intersection, summary.max_n, summary.max_m);
  std::printf("%-6s %10s %10s %10s\n", "class", "pairs", "equal", "frequency");
  for (int c = 0; c < 4; ++c) {
    const auto& stats = summary.by_class[static_cast<std::size_t>(c)];
    if (stats.pairs == 0) {
      std::printf("%-6s %10" PRId64 " %10" PRId64 " %10s\n",
                  prodset::to_string(static_cast<prodset::ParityClass>(c)), stats.pairs,
                  stats.equal, "-");
    } else {
      std::printf("%-6s %10" PRId64 " %10" PRId64 " %10.6f\n",
                  prodset::to_string(static_cast<prodset::ParityClass>(c)), stats.pairs,
                  stats.equal,
                  static_cast<double>(stats.equal) / static_cast<double>(stats.pairs));
    }
  }
}

int run_scan(const GlobalOptions& global, int64_t n_max, bool maxima_only, bool progress) {
  prodset::ScanOptions options;
  options.n_max = n_max;
  options.threads = global.threads;
  options.maxima_only = maxima_only;
  options.progress_to_stderr = progress;
  const prodset::ScanResult result = prodset::scan_pairs(options);

  if (global.format == "json") {
    json records = json::array();
    for (const auto& record : result.records) {
      records.push_back({{"n", record.n},
                         {"m", record.m},
                         {"size", record.intersection_size},
                         {"tau", record.tau},
                         {"class", prodset::to_string(record.parity)},
                         {"equal", record.equality}});
    }
    json classes;
    for (int c = 0; c < 4; ++c) {
      const auto& stats = result.summary.by_class[static_cast<std::size_t>(c)];
      json entry{{"pairs", stats.pairs}, {"equal", stats.equal}};
      if (stats.pairs > 0) {
        entry["frequency"] =
            static_cast<double>(stats.equal) / static_cast<double>(stats.pairs);
      } else {
        entry["frequency"] = nullptr;
      }
      classes[prodset::to_string(static_cast<prodset::ParityClass>(c))] = entry;
    }
    emit_json("scan", {{"n_max", n_max}, {"maxima_only", maxima_only}},
              {{"records", records},
               {"summary",
                {{"pairs_checked", result.summary.pairs_checked},
                 {"max_intersection", result.summary.max_intersection},
                 {"max_n", result.summary.max_n},
                 {"max_m", result.summary.max_m},
                 {"classes", classes}}}});
  } else if (global.format == "csv") {
    std::printf("n,m,intersection_size,tau,parity_class,equality\n");
    for (const auto& record : result.records) {
      std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64 ",%s,%s\n", record.n,
                  record.m, record.intersection_size, record.tau,
                  prodset::to_string(record.parity), record.equality ? "true" : "false");
    }
    std::printf("# pairs_checked=%" PRId64 " max_intersection=%" PRId64 " at n=%" PRId64
                " m=%" PRId64 "\n",
                result.summary.pairs_checked, result.summary.max_intersection,
                result.summary.max_n, result.summary.max_m);
    for (int c = 0; c < 4; ++c) {
      const auto& stats = result.summary.by_class[static_cast<std::size_t>(c)];
      if (stats.pairs > 0) {
        std::printf("# class=%s pairs=%" PRId64 " equal=%" PRId64 " frequency=%.6f\n",
                    prodset::to_string(static_cast<prodset::ParityClass>(c)), stats.pairs,
                    stats.equal,
                    static_cast<double>(stats.equal) / static_cast<double>(stats.pairs));
      } else {
        std::printf("# class=%s pairs=0 equal=0 frequency=-\n",
                    prodset::to_string(static_cast<prodset::ParityClass>(c)));
      }
    }
  } else {
    std::printf("%6s %6s %6s %6s %6s %6s\n", "n", "m", "size", "tau", "class", "equal");
    for (const auto& record : result.records) {
      std::printf("%6" PRId64 " %6" PRId64 " %6" PRId64 " %6" PRId64 " %6s %6s\n", record.n,
                  record.m, record.intersection_size, record.tau,
                  prodset::to_string(record.parity), record.equality ? "true" : "false");
    }
    if (maxima_only) std::printf("(records: running maxima only)\n");
    print_scan_summary_table(result.summary);
  }
  return 0;
}

// ---------------------------------------------------------------- construct

int run_construct(const GlobalOptions& global, int64_t s, std::optional<int64_t> p,
                  std::optional<int64_t> alpha, int64_t count) {
  if (count < 1) throw std::invalid_argument("construct: count must be >= 1");
  if (alpha && !p) throw std::invalid_argument("construct: --alpha requires --p");
  if (p && count > 1) {
    throw std::invalid_argument("construct: --count > 1 walks consecutive primes; drop --p");
  }

  std::vector<prodset::FamilySpec> specs;
  if (p) {
    specs.push_back(prodset::construct_pair(s, *p, alpha));
  } else {
    specs = prodset::construct_sequence(s, count);
  }

  if (global.format == "json") {
    json spec_list = json::array();
    for (const auto& spec : specs) {
      json pairs = json::array();
      for (const auto& pair : prodset::predicted_pairs(spec)) {
        pairs.push_back({pair.lo, pair.hi});
      }
      const auto values = prodset::intersect_fast(spec.n, spec.m);
      spec_list.push_back({{"s", spec.target_size},
                           {"p", spec.prime},
                           {"alpha", spec.pow2_exponent},
                           {"n", spec.n},
                           {"m", spec.m},
                           {"predicted_pairs", pairs},
                           {"values", values},
                           {"size", static_cast<int64_t>(values.size())}});
    }
    json params{{"s", s}, {"count", count}};
    if (p) params["p"] = *p;
    if (alpha) params["alpha"] = *alpha;
    emit_json("construct", params, {{"specs", spec_list}});
  } else if (global.format == "csv") {
    std::printf("s,p,alpha,n,m,size,values,predicted_pairs\n");
    for (const auto& spec : specs) {
      const auto values = prodset::intersect_fast(spec.n, spec.m);
      std::string predicted;
      for (const auto& pair : prodset::predicted_pairs(spec)) {
        if (!predicted.empty()) predicted += ";";
        predicted += std::to_string(pair.lo) + ":" + std::to_string(pair.hi);
      }
      std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64
                  ",%zu,%s,%s\n",
                  spec.target_size, spec.prime, spec.pow2_exponent, spec.n, spec.m,
                  values.size(), join(values, ";").c_str(), predicted.c_str());
    }
  } else {
    for (const auto& spec : specs) {
      const auto values = prodset::intersect_fast(spec.n, spec.m);
      std::printf("s=%" PRId64 " p=%" PRId64 " alpha=%" PRId64 " n=%" PRId64 " m=%" PRId64
                  "\n",
                  spec.target_size, spec.prime, spec.pow2_exponent, spec.n, spec.m);
      std::string predicted;
      for (const auto& pair : prodset::predicted_pairs(spec)) {
        predicted += " (" + std::to_string(pair.lo) + "," + std::to_string(pair.hi) + ")";
      }
      std::printf("predicted pairs:%s\n", predicted.c_str());
      std::printf("intersection (%zu values): %s\n", values.size(),
                  values.empty() ? "none" : join(values, " ").c_str());
    }
  }
  return 0;
}

// -------------------------------------------------------------- bound-check

int run_bound_check(const GlobalOptions& global, std::optional<int64_t> x,
                    std::optional<int64_t> max_x, double epsilon) {
  if (x.has_value() == max_x.has_value()) {
    throw std::invalid_argument("bound-check: pass exactly one of --x and --max");
  }

  if (x) {
    const int64_t d = prodset::divisor_count(*x);
    const double bound = prodset::divisor_bound(*x, epsilon);
    const bool ok = static_cast<double>(d) < bound;
    if (global.format == "json") {
      emit_json("bound-check", {{"x", *x}, {"epsilon", epsilon}},
                {{"x", *x},
                 {"divisor_count", d},
                 {"bound", bound},
                 {"holds", ok}});
    } else if (global.format == "csv") {
      std::printf("x,epsilon,divisor_count,bound,holds\n");
      std::printf("%" PRId64 ",%.17g,%" PRId64 ",%.17g,%s\n", *x, epsilon, d, bound,
                  ok ? "true" : "false");
    } else {
      std::printf("x=%" PRId64 " epsilon=%g\n", *x, epsilon);
      std::printf("divisor count : %" PRId64 "\n", d);
      std::printf("bound         : %.9g\n", bound);
      std::printf("holds         : %s\n", ok ? "true" : "false");
    }
    return 0;
  }

  if (*max_x < 16) throw std::invalid_argument("bound-check: --max must be at least 16");
  std::optional<prodset::SpfSieve> sieve;
  if (*max_x <= prodset::SpfSieve::kDefaultLimit) sieve.emplace(*max_x);

  int64_t violations = 0;
  int64_t first_violation = 0;
  double max_ratio = 0.0;
  int64_t max_ratio_x = 0;
  for (int64_t v = 16; v <= *max_x; ++v) {
    const int64_t d = sieve ? sieve->divisor_count(v) : prodset::divisor_count(v);
    const double bound = prodset::divisor_bound(v, epsilon);
    const double ratio = static_cast<double>(d) / bound;
    if (ratio > max_ratio) {
      max_ratio = ratio;
      max_ratio_x = v;
    }
    if (static_cast<double>(d) >= bound) {
      if (violations == 0) first_violation = v;
      ++violations;
    }
  }

  if (global.format == "json") {
    json result{{"min", 16},
                {"max", *max_x},
                {"epsilon", epsilon},
                {"violations", violations},
                {"max_ratio", max_ratio},
                {"max_ratio_x", max_ratio_x}};
    if (violations > 0) result["first_violation"] = first_violation;
    emit_json("bound-check", {{"max", *max_x}, {"epsilon", epsilon}}, result);
  } else if (global.format == "csv") {
    std::printf("min,max,epsilon,violations,max_ratio,max_ratio_x\n");
    std::printf("16,%" PRId64 ",%.17g,%" PRId64 ",%.17g,%" PRId64 "\n", *max_x, epsilon,
                violations, max_ratio, max_ratio_x);
  } else {
    std::printf("bound-check over [16, %" PRId64 "], epsilon=%g\n", *max_x, epsilon);
    std::printf("violations : %" PRId64 "\n", violations);
    if (violations > 0) std::printf("first at   : %" PRId64 "\n", first_violation);
    std::printf("max ratio  : %.9g at x=%" PRId64 "\n", max_ratio, max_ratio_x);
  }
  return 0;
}

// ------------------------------------------------------------------ sumprod

std::vector<int64_t> read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("sumprod: cannot open input file " + path);
  std::vector<int64_t> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::size_t parsed = 0;
    long long value = 0;
    try {
      value = std::stoll(line.substr(start), &parsed);
    } catch (const std::exception&) {
      throw std::invalid_argument("sumprod: malformed integer at line " +
                                  std::to_string(lineno));
    }
    const std::string rest = line.substr(start + parsed);
    if (rest.find_first_not_of(" \t\r") != std::string::npos) {
      throw std::invalid_argument("sumprod: trailing junk at line " + std::to_string(lineno));
    }
    if (value < 1) {
      throw std::invalid_argument("sumprod: elements must be positive (line " +
                                  std::to_string(lineno) + ")");
    }
    out.push_back(value);
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] == out[i - 1]) {
      throw std::invalid_argument("sumprod: duplicate element " + std::to_string(out[i]));
    }
  }
  return out;
}

json report_to_json(const prodset::SumProductReport& report) {
  json j{{"set_size", report.set_size},
         {"sumset_size", report.sumset_size},
         {"productset_size", report.productset_size},
         {"c", report.c},
         {"thresholds_defined", report.thresholds_defined}};
  auto put = [&j](const char* key, const auto& opt) {
    if (opt.has_value()) {
      j[key] = *opt;
    } else {
      j[key] = nullptr;
    }
  };
  put("heavy_exponent", report.heavy_exponent);
  put("pairwise_exponent", report.pairwise_exponent);
  put("heavy_threshold", report.heavy_threshold);
  put("heavy_class_count", report.heavy_class_count);
  put("min_heavy_class_products", report.min_heavy_class_products);
  put("max_pairwise_product_intersection", report.max_pairwise_product_intersection);
  put("covering_bound", report.covering_bound);
  put("target_exponent", report.target_exponent);
  put("conclusion_met", report.conclusion_met);
  return j;
}

// Sets below the experiment's minimum size still get the size accounting,
// with every threshold field left undefined.
prodset::SumProductReport degenerate_report(const std::vector<int64_t>& a, double c) {
  const auto partition = prodset::partition_by_sum(a);
  prodset::SumProductReport report;
  report.set_size = static_cast<int64_t>(a.size());
  report.c = c;
  report.sumset_size = static_cast<int64_t>(partition.classes.size());
  std::vector<int64_t> products;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) products.push_back(a[i] * a[j]);
  }
  std::sort(products.begin(), products.end());
  products.erase(std::unique(products.begin(), products.end()), products.end());
  report.productset_size = static_cast<int64_t>(products.size());
  report.thresholds_defined = false;
  return report;
}

int run_sumprod(const GlobalOptions& global, const std::string& input,
                const std::vector<int64_t>& random_spec, double c) {
  if (input.empty() == random_spec.empty()) {
    throw std::invalid_argument("sumprod: pass exactly one of --input and --random");
  }

  std::vector<int64_t> a;
  json params{{"c", c}};
  if (!input.empty()) {
    a = read_set_file(input);
    params["input"] = input;
  } else {
    const int64_t count = random_spec[0];
    const int64_t max_value = random_spec[1];
    if (count < 2 || max_value < count) {
      throw std::invalid_argument("sumprod: --random needs count >= 2 and max >= count");
    }
    prodset::SplitMix64 rng(global.seed);
    a = prodset::sample_distinct(rng, count, 1, max_value);
    params["random"] = {{"count", count}, {"max", max_value}};
    params["seed"] = global.seed;
  }
  if (a.size() < 2) throw std::invalid_argument("sumprod: need at least 2 elements");

  const prodset::SumProductReport report =
      a.size() < 4 ? degenerate_report(a, c) : prodset::conditional_experiment(a, c);

  if (global.format == "json") {
    emit_json("sumprod", params, report_to_json(report));
  } else if (global.format == "csv") {
    auto opt_int = [](const std::optional<int64_t>& v) {
      return v ? std::to_string(*v) : std::string();
    };
    auto opt_double = [](const std::optional<double>& v) {
      if (!v) return std::string();
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", *v);
      return std::string(buf);
    };
    std::printf(
        "set_size,sumset_size,productset_size,c,thresholds_defined,heavy_exponent,"
        "pairwise_exponent,heavy_threshold,heavy_class_count,min_heavy_class_products,"
        "max_pairwise_product_intersection,covering_bound,target_exponent,conclusion_met\n");
    std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 ",%.17g,%s,%s,%s,%s,%s,%s,%s,%s,%s,%s\n",
                report.set_size, report.sumset_size, report.productset_size, report.c,
                report.thresholds_defined ? "true" : "false",
                opt_double(report.heavy_exponent).c_str(),
                opt_double(report.pairwise_exponent).c_str(),
                opt_double(report.heavy_threshold).c_str(),
                opt_int(report.heavy_class_count).c_str(),
                opt_int(report.min_heavy_class_products).c_str(),
                opt_int(report.max_pairwise_product_intersection).c_str(),
                opt_double(report.covering_bound).c_str(),
                opt_double(report.target_exponent).c_str(),
                report.conclusion_met ? (*report.conclusion_met ? "true" : "false") : "");
  } else {
    auto line_int = [](const char* label, const std::optional<int64_t>& v) {
      if (v) {
        std::printf("%-34s: %" PRId64 "\n", label, *v);
      } else {
        std::printf("%-34s: undefined\n", label);
      }
    };
    auto line_double = [](const char* label, const std::optional<double>& v) {
      if (v) {
        std::printf("%-34s: %.9g\n", label, *v);
      } else {
        std::printf("%-34s: undefined\n", label);
      }
    };
    std::printf("sum-product report\n");
    std::printf("%-34s: %" PRId64 "\n", "set size", report.set_size);
    std::printf("%-34s: %" PRId64 "\n", "sumset size", report.sumset_size);
    std::printf("%-34s: %" PRId64 "\n", "product set size", report.productset_size);
    std::printf("%-34s: %.9g\n", "c", report.c);
    line_double("heavy exponent", report.heavy_exponent);
    line_double("pairwise exponent", report.pairwise_exponent);
    line_double("heavy threshold", report.heavy_threshold);
    line_int("heavy class count", report.heavy_class_count);
    line_int("min heavy class products", report.min_heavy_class_products);
    line_int("max pairwise product overlap", report.max_pairwise_product_intersection);
    line_double("covering bound", report.covering_bound);
    line_double("target exponent", report.target_exponent);
    if (report.conclusion_met) {
      std::printf("%-34s: %s\n", "conclusion met", *report.conclusion_met ? "true" : "false");
    } else {
      std::printf("%-34s: undefined\n", "conclusion met");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"product-set intersection toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions global;
  auto* format_option =
      app.add_option("--format", global.format, "output format (sumprod defaults to json)")
          ->check(CLI::IsMember({"table", "json", "csv"}))
          ->capture_default_str();
  app.add_option("--threads", global.threads, "worker threads for scans (0 = all cores)");
  app.add_option("--seed", global.seed, "seed for randomized inputs")->capture_default_str();

  // intersect
  int64_t arg_n = 0;
  int64_t arg_m = 0;
  std::string method = "fast";
  auto* cmd_intersect = app.add_subcommand("intersect", "intersect A_n and A_m");
  cmd_intersect->add_option("n", arg_n, "smaller index")->required();
  cmd_intersect->add_option("m", arg_m, "larger index")->required();
  cmd_intersect->add_option("--method", method, "fast | brute | both")
      ->check(CLI::IsMember({"fast", "brute", "both"}))
      ->capture_default_str();

  // tau
  auto* cmd_tau = app.add_subcommand("tau", "admissible factor pairs of (n, m)");
  cmd_tau->add_option("n", arg_n, "smaller index")->required();
  cmd_tau->add_option("m", arg_m, "larger index")->required();

  // scan
  int64_t n_max = 0;
  bool maxima_only = false;
  bool progress = false;
  auto* cmd_scan = app.add_subcommand("scan", "sweep all pairs up to n-max");
  cmd_scan->add_option("--n-max", n_max, "scan all 2 <= n < m <= n-max")->required();
  cmd_scan->add_flag("--maxima-only", maxima_only,
                     "emit only records breaking the running maximum");
  cmd_scan->add_flag("--progress", progress, "progress reporting on standard error");

  // construct
  int64_t s = 0;
  int64_t count = 1;
  std::optional<int64_t> p;
  std::optional<int64_t> alpha;
  auto* cmd_construct =
      app.add_subcommand("construct", "build pairs with an exact intersection size");
  cmd_construct->add_option("--s", s, "target intersection size")->required();
  cmd_construct->add_option("--p", p, "odd prime parameter (default: 3)");
  cmd_construct->add_option("--alpha", alpha, "power-of-two exponent (default: minimal)");
  cmd_construct->add_option("--count", count, "emit a sequence of this many specs");

  // bound-check
  std::optional<int64_t> bc_x;
  std::optional<int64_t> bc_max;
  double epsilon = 1.0;
  auto* cmd_bound =
      app.add_subcommand("bound-check", "divisor count against the divisor bound");
  cmd_bound->add_option("--x", bc_x, "check a single value");
  cmd_bound->add_option("--max", bc_max, "sweep x in [16, max]");
  cmd_bound->add_option("--epsilon", epsilon, "bound parameter")->capture_default_str();

  // sumprod
  std::string input;
  std::vector<int64_t> random_spec;
  double c = 0.5;
  auto* cmd_sumprod = app.add_subcommand("sumprod", "sum-product accounting report");
  cmd_sumprod->add_option("--input", input, "input file, one positive integer per line");
  cmd_sumprod->add_option("--random", random_spec, "random set: COUNT MAX")
      ->expected(2);
  cmd_sumprod->add_option("--c", c, "exponent parameter in (0, 1)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // The sumprod report is a JSON artifact by contract; a table needs an
  // explicit --format table.
  if (cmd_sumprod->parsed() && format_option->count() == 0) global.format = "json";

  try {
    if (cmd_intersect->parsed()) return run_intersect(global, arg_n, arg_m, method);
    if (cmd_tau->parsed()) return run_tau(global, arg_n, arg_m);
    if (cmd_scan->parsed()) return run_scan(global, n_max, maxima_only, progress);
    if (cmd_construct->parsed()) return run_construct(global, s, p, alpha, count);
    if (cmd_bound->parsed()) return run_bound_check(global, bc_x, bc_max, epsilon);
    if (cmd_sumprod->parsed()) return run_sumprod(global, input, random_spec, c);
  } catch (const prodset::falsification_error& e) {
    std::fprintf(stderr, "falsification: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::length_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::overflow_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}
