#include "cpplc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "cpplc/oracle.hpp"
#include "cpplc/tour_eval.hpp"

namespace cpplc {

namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

}  // namespace

BenchReport run_bench(const std::vector<NamedInstance>& instances, const BenchOptions& options) {
  struct Cell {
    std::size_t instance;
    Algorithm algorithm;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (Algorithm alg : options.algorithms) {
      for (std::uint64_t seed : options.seeds) cells.push_back({i, alg, seed});
    }
  }

  std::vector<ShortestPaths> paths(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    paths[i] = all_pairs_shortest_paths(instances[i].instance);
  }

  BenchReport report;
  report.rows.resize(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      const Cell& cell = cells[c];
      SolveOptions solve_options;
      solve_options.algorithm = cell.algorithm;
      solve_options.seed = cell.seed;
      solve_options.iters = options.iters;
      solve_options.max_evals = options.max_evals;
      solve_options.pop = options.pop;
      solve_options.eta_mode = options.eta_mode;
      const SolveResult result =
          solve(instances[cell.instance].instance, paths[cell.instance], solve_options);
      BenchRow& row = report.rows[c];
      row.instance = instances[cell.instance].name;
      row.algorithm = cell.algorithm;
      row.seed = cell.seed;
      row.cost = result.best_cost;
      row.evals = result.evals_used;
      row.seconds = result.wall_seconds;
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, cells.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  aggregate(report, instances, options);
  return report;
}

BenchReport run_bench(const std::filesystem::path& dir, const BenchOptions& options) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().filename().string().starts_with(".")) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<NamedInstance> instances;
  std::vector<std::string> warnings;
  for (const auto& file : files) {
    try {
      Instance instance = read_instance(file);
      const auto errors = validate(instance);
      if (!errors.empty()) {
        warnings.push_back("skipping " + file.filename().string() + ": " + errors.front());
        continue;
      }
      instances.push_back({file.filename().string(), std::move(instance)});
    } catch (const Error& e) {
      warnings.push_back("skipping " + file.filename().string() + ": " + e.what());
    }
  }
  BenchReport report = run_bench(instances, options);
  report.warnings = std::move(warnings);
  return report;
}

void aggregate(BenchReport& report, const std::vector<NamedInstance>& instances,
               const BenchOptions& options) {
  std::map<std::string, double> reference;
  for (const BenchRow& row : report.rows) {
    auto [it, fresh] = reference.emplace(row.instance, row.cost);
    if (!fresh) it->second = std::min(it->second, row.cost);
  }
  if (options.gap_ref == GapReference::kExact) {
    for (const NamedInstance& named : instances) {
      if (named.instance.edge_count() > kExactEdgeLimit) continue;
      const ShortestPaths paths = all_pairs_shortest_paths(named.instance);
      reference[named.name] = exact_optimum(named.instance, paths).best_cost;
    }
  }

  std::map<Algorithm, BenchSummary> by_alg;
  for (BenchRow& row : report.rows) {
    const double best = reference.at(row.instance);
    row.gap_percent = best != 0.0 ? 100.0 * (row.cost - best) / best : 0.0;
    BenchSummary& s = by_alg[row.algorithm];
    s.algorithm = row.algorithm;
    ++s.runs;
    s.mean_cost += row.cost;
    s.mean_gap_percent += row.gap_percent;
    s.mean_seconds += row.seconds;
  }
  report.summary.clear();
  for (Algorithm alg : options.algorithms) {
    auto it = by_alg.find(alg);
    if (it == by_alg.end()) continue;
    BenchSummary s = it->second;
    const auto runs = static_cast<double>(s.runs);
    s.mean_cost /= runs;
    s.mean_gap_percent /= runs;
    s.mean_seconds /= runs;
    report.summary.push_back(s);
  }
}

void write_csv(std::ostream& out, const BenchReport& report, bool with_time) {
  out << "instance,alg,seed,cost,evals,seconds\n";
  for (const BenchRow& row : report.rows) {
    out << row.instance << ',' << to_string(row.algorithm) << ',' << row.seed << ','
        << fixed(row.cost, 6) << ',' << row.evals << ',' << fixed(with_time ? row.seconds : 0.0, 6)
        << '\n';
  }
}

std::string format_summary(const BenchReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-6s %6s %18s %10s %12s\n", "Method", "Runs", "Obj.", "Gap (%)",
                "Time (s)");
  out << line;
  for (const BenchSummary& s : report.summary) {
    std::snprintf(line, sizeof line, "%-6s %6zu %18.2f %10.2f %12.3f\n", to_string(s.algorithm).c_str(),
                  s.runs, s.mean_cost, s.mean_gap_percent, s.mean_seconds);
    out << line;
  }
  return out.str();
}

CostCheck check_solution(const Instance& instance, const ShortestPaths& paths,
                         const SolutionFile& solution, double tolerance) {
  CostCheck check;
  check.stated_cost = solution.cost;
  AbbreviatedTour order;
  for (const ServiceStep& s : solution.steps) order.push_back(s.edge);
  try {
    check_permutation(order, instance.edge_count());
  } catch (const InvalidTour& e) {
    check.diagnostic = e.what();
    return check;
  }
  check.valid = true;
  check.dp_cost = dp_cost(instance, paths, order);
  check.directed_cost = evaluate_directed(instance, paths, solution.steps);
  check.matches = std::abs(check.stated_cost - check.directed_cost) <= tolerance;
  if (!check.matches) {
    check.diagnostic = "stated cost " + fixed(check.stated_cost, 6) + " differs from " +
                       fixed(check.directed_cost, 6);
  }
  return check;
}

}  // namespace cpplc
