#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cpplc/instance.hpp"
#include "cpplc/io.hpp"
#include "cpplc/shortest_paths.hpp"
#include "cpplc/solve.hpp"

namespace cpplc {

enum class GapReference {
  kBestFound,  // min cost over every algorithm and seed on the instance
  kExact,      // exact_optimum when m <= kExactEdgeLimit, else best found
};

struct BenchOptions {
  std::vector<Algorithm> algorithms{Algorithm::kGhc, Algorithm::kIls, Algorithm::kVns,
                                    Algorithm::kEa, Algorithm::kAco};
  std::vector<std::uint64_t> seeds{1};
  int iters = 100;
  std::optional<std::int64_t> max_evals;
  std::size_t pop = 10;
  EtaMode eta_mode = EtaMode::kSqrt;
  GapReference gap_ref = GapReference::kBestFound;
  unsigned threads = 1;
};

struct NamedInstance {
  std::string name;
  Instance instance;
};

struct BenchRow {
  std::string instance;
  Algorithm algorithm = Algorithm::kGhc;
  std::uint64_t seed = 0;
  double cost = 0.0;
  std::int64_t evals = 0;
  double seconds = 0.0;  // solve only: parsing and shortest paths excluded
  double gap_percent = 0.0;
};

struct BenchSummary {
  Algorithm algorithm = Algorithm::kGhc;
  std::size_t runs = 0;
  double mean_cost = 0.0;
  double mean_gap_percent = 0.0;
  double mean_seconds = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // instance-major, then algorithm, then seed
  std::vector<BenchSummary> summary;
  std::vector<std::string> warnings;
};

/// Every (instance, algorithm, seed) cell, run on `options.threads` workers.
/// Row order does not depend on scheduling.
BenchReport run_bench(const std::vector<NamedInstance>& instances, const BenchOptions& options);

/// Loads every regular, non-hidden file of `dir` in name order. Files that fail
/// to parse or validate are skipped with a warning.
BenchReport run_bench(const std::filesystem::path& dir, const BenchOptions& options);

/// Recomputes gap and summary columns from the raw rows.
void aggregate(BenchReport& report, const std::vector<NamedInstance>& instances,
               const BenchOptions& options);

/// CSV with header instance,alg,seed,cost,evals,seconds. With `with_time`
/// false the seconds column is written as 0 so reruns are byte-identical.
void write_csv(std::ostream& out, const BenchReport& report, bool with_time = true);

/// Aligned Obj / Gap / Time table, one line per algorithm.
std::string format_summary(const BenchReport& report);

/// Verdict of the `cost` command.
struct CostCheck {
  bool valid = false;  // the solution's edges form a permutation
  std::string diagnostic;
  double dp_cost = 0.0;        // optimal directions for the stated order
  double directed_cost = 0.0;  // the stated directions
  double stated_cost = 0.0;
  bool matches = false;  // |stated - directed| <= tolerance
};

CostCheck check_solution(const Instance& instance, const ShortestPaths& paths,
                         const SolutionFile& solution, double tolerance = 1e-6);

}  // namespace cpplc
