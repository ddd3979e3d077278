// cpplc: generate, verify, solve and benchmark CPP-LC instances.
//
// Exit codes: 0 ok, 1 runtime error or failed verification, 2 invalid input.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpplc/bench.hpp"
#include "cpplc/instance_gen.hpp"
#include "cpplc/io.hpp"
#include "cpplc/shortest_paths.hpp"
#include "cpplc/solve.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRuntimeError = 1;
constexpr int kInvalidInput = 2;

class InvalidInput : public cpplc::Error {
 public:
  using cpplc::Error::Error;
};

cpplc::Instance load_valid_instance(const std::string& path) {
  cpplc::Instance instance;
  try {
    instance = cpplc::read_instance(path);
  } catch (const cpplc::Error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  const auto errors = cpplc::validate(instance);
  if (!errors.empty()) {
    std::string msg = path + ": invalid instance";
    for (const auto& err : errors) msg += "\n  " + err;
    throw InvalidInput(msg);
  }
  return instance;
}

unsigned worker_count() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CPPLC_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) threads = std::min(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

struct GenArgs {
  int n = 10;
  double density = 0.4;
  std::string demand = "rand";
  std::string weight = "halfQ";
  bool eulerian = false;
  std::uint64_t seed = 1;
  int count = 1;
  std::string out_dir = ".";
};

int run_gen(const GenArgs& args) {
  cpplc::GeneratorOptions options;
  try {
    options.demand = cpplc::parse_demand_mode(args.demand);
    options.weight = cpplc::parse_weight_mode(args.weight);
  } catch (const cpplc::Error& e) {
    throw InvalidInput(e.what());
  }
  options.n = args.n;
  options.density = args.density;
  options.eulerian = args.eulerian;
  std::filesystem::create_directories(args.out_dir);
  for (int k = 0; k < args.count; ++k) {
    options.seed = args.seed + static_cast<std::uint64_t>(k);
    const cpplc::Instance instance = cpplc::generate(options);
    char name[64];
    std::snprintf(name, sizeof name, "inst_%04d.cpplc", k);
    const auto path = std::filesystem::path(args.out_dir) / name;
    cpplc::write_instance(path, instance);
    std::cout << path.string() << '\n';
  }
  return kOk;
}

int run_cost(const std::string& instance_path, const std::string& solution_path) {
  const cpplc::Instance instance = load_valid_instance(instance_path);
  cpplc::SolutionFile solution;
  try {
    solution = cpplc::read_solution(solution_path);
  } catch (const cpplc::Error& e) {
    throw InvalidInput(solution_path + ": " + e.what());
  }
  const cpplc::ShortestPaths paths = cpplc::all_pairs_shortest_paths(instance);
  const cpplc::CostCheck check = cpplc::check_solution(instance, paths, solution);
  if (!check.valid) {
    std::cout << "verdict invalid\n";
    std::cerr << check.diagnostic << '\n';
    return kInvalidInput;
  }
  std::cout << "dp_cost " << fixed6(check.dp_cost) << '\n'
            << "directed_cost " << fixed6(check.directed_cost) << '\n'
            << "stated_cost " << fixed6(check.stated_cost) << '\n'
            << "verdict " << (check.matches ? "valid" : "mismatch") << '\n';
  if (!check.matches) {
    std::cerr << check.diagnostic << '\n';
    return kRuntimeError;
  }
  return kOk;
}

struct SolveArgs {
  std::string instance;
  std::string alg = "ea";
  std::uint64_t seed = 1;
  int iters = 100;
  std::optional<std::int64_t> max_evals;
  std::size_t pop = 10;
  std::string aco_eta = "sqrt";
  std::string out;
};

cpplc::EtaMode parse_eta(const std::string& text) {
  if (text == "sqrt") return cpplc::EtaMode::kSqrt;
  if (text == "inverse") return cpplc::EtaMode::kInverse;
  throw InvalidInput("unknown --aco-eta value '" + text + "'");
}

int run_solve(const SolveArgs& args) {
  const cpplc::Instance instance = load_valid_instance(args.instance);
  const cpplc::ShortestPaths paths = cpplc::all_pairs_shortest_paths(instance);
  cpplc::SolveOptions options;
  try {
    options.algorithm = cpplc::parse_algorithm(args.alg);
  } catch (const cpplc::Error& e) {
    throw InvalidInput(e.what());
  }
  options.seed = args.seed;
  options.iters = args.iters;
  options.max_evals = args.max_evals;
  options.pop = args.pop;
  options.eta_mode = parse_eta(args.aco_eta);

  const cpplc::SolveResult result = cpplc::solve(instance, paths, options);
  if (args.out.empty()) {
    cpplc::format_solution(std::cout, result.best_tour);
  } else {
    cpplc::write_solution(args.out, result.best_tour);
  }
  nlohmann::ordered_json stats;
  stats["alg"] = args.alg;
  stats["cost"] = result.best_cost;
  stats["evals"] = result.evals_used;
  stats["iters"] = result.iters_done;
  stats["seconds"] = result.wall_seconds;
  std::cout << stats.dump() << '\n';
  return kOk;
}

struct BenchArgs {
  std::string dir;
  std::vector<std::string> algs{"ghc", "ils", "vns", "ea", "aco"};
  std::vector<std::uint64_t> seeds{1};
  int iters = 100;
  std::optional<std::int64_t> max_evals;
  std::size_t pop = 10;
  std::string aco_eta = "sqrt";
  std::string gap_ref = "best";
  std::string csv;
  bool no_timing = false;
};

int run_bench(const BenchArgs& args) {
  cpplc::BenchOptions options;
  options.algorithms.clear();
  for (const auto& name : args.algs) {
    try {
      options.algorithms.push_back(cpplc::parse_algorithm(name));
    } catch (const cpplc::Error& e) {
      throw InvalidInput(e.what());
    }
  }
  options.seeds = args.seeds;
  options.iters = args.iters;
  options.max_evals = args.max_evals;
  options.pop = args.pop;
  options.eta_mode = parse_eta(args.aco_eta);
  if (args.gap_ref == "exact") {
    options.gap_ref = cpplc::GapReference::kExact;
  } else if (args.gap_ref != "best") {
    throw InvalidInput("unknown --gap-ref value '" + args.gap_ref + "'");
  }
  options.threads = worker_count();

  const cpplc::BenchReport report = cpplc::run_bench(args.dir, options);
  for (const auto& warning : report.warnings) std::cerr << "warning: " << warning << '\n';
  if (!args.csv.empty()) {
    std::ofstream out(args.csv, std::ios::binary);
    if (!out) throw cpplc::Error("cannot write " + args.csv);
    cpplc::write_csv(out, report, !args.no_timing);
  }
  std::cout << cpplc::format_summary(report);
  return report.warnings.empty() ? kOk : kInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver suite for the Chinese postman problem with load-dependent costs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random instances");
  gen_cmd->add_option("--n", gen.n, "Node count (>= 3)");
  gen_cmd->add_option("--density", gen.density, "Edge density in (0, 1]");
  gen_cmd->add_option("--demand", gen.demand, "Demands: prop (q = d) or rand (uniform 1..100)");
  gen_cmd->add_option("--w", gen.weight, "Curb weight: 0, halfQ or fiveQ");
  gen_cmd->add_flag("--eulerian", gen.eulerian, "Duplicate edges until every degree is even");
  gen_cmd->add_option("--seed", gen.seed, "Seed of the first instance; instance k uses seed + k");
  gen_cmd->add_option("--count", gen.count, "Number of instances");
  gen_cmd->add_option("--out-dir", gen.out_dir, "Output directory");

  std::string cost_instance;
  std::string cost_solution;
  auto* cost_cmd = app.add_subcommand("cost", "Verify a solution file against an instance");
  cost_cmd->add_option("instance", cost_instance)->required();
  cost_cmd->add_option("solution", cost_solution)->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("instance", solve.instance)->required();
  solve_cmd->add_option("--alg", solve.alg, "ghc, ils, vns, ea, aco or exact");
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_option("--iters", solve.iters, "Outer iterations (k_max)");
  solve_cmd->add_option("--max-evals", solve.max_evals, "Cap on DP evaluations");
  solve_cmd->add_option("--pop", solve.pop, "Population size / ants per iteration");
  solve_cmd->add_option("--aco-eta", solve.aco_eta, "ACO attractiveness: sqrt or inverse");
  solve_cmd->add_option("--out", solve.out, "Solution file (default: stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand(
      "bench",
      "Run algorithms over a directory of instances. Time is measured around the solve "
      "only; parsing and shortest-path precomputation are excluded. CPPLC_THREADS caps "
      "the worker count.");
  bench_cmd->add_option("dir", bench.dir)->required();
  bench_cmd->add_option("--algs", bench.algs, "Algorithms")->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds")->delimiter(',');
  bench_cmd->add_option("--iters", bench.iters);
  bench_cmd->add_option("--max-evals", bench.max_evals);
  bench_cmd->add_option("--pop", bench.pop);
  bench_cmd->add_option("--aco-eta", bench.aco_eta);
  bench_cmd->add_option("--gap-ref", bench.gap_ref, "best or exact");
  bench_cmd->add_option("--csv", bench.csv, "Raw per-run CSV output");
  bench_cmd->add_flag("--no-timing", bench.no_timing,
                      "Write 0 in the CSV seconds column (byte-reproducible output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*cost_cmd) return run_cost(cost_instance, cost_solution);
    if (*solve_cmd) return run_solve(solve);
    if (*bench_cmd) return run_bench(bench);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kRuntimeError;
}
