#include "cpplc/solve.hpp"

#include <chrono>

#include "cpplc/construction.hpp"
#include "cpplc/oracle.hpp"
#include "cpplc/tour_eval.hpp"

namespace cpplc {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "ghc") return Algorithm::kGhc;
  if (name == "ils") return Algorithm::kIls;
  if (name == "vns") return Algorithm::kVns;
  if (name == "ea") return Algorithm::kEa;
  if (name == "aco") return Algorithm::kAco;
  if (name == "exact") return Algorithm::kExact;
  throw Error("unknown algorithm '" + name + "'");
}

std::string to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::kGhc:
      return "ghc";
    case Algorithm::kIls:
      return "ils";
    case Algorithm::kVns:
      return "vns";
    case Algorithm::kEa:
      return "ea";
    case Algorithm::kAco:
      return "aco";
    case Algorithm::kExact:
      return "exact";
  }
  return "?";
}

SolveResult solve(const Instance& instance, const ShortestPaths& paths,
                  const SolveOptions& options) {
  Budget budget(options.iters, options.max_evals);
  Rng rng(options.seed);
  switch (options.algorithm) {
    case Algorithm::kGhc: {
      const auto started = std::chrono::steady_clock::now();
      SolveResult result;
      result.best_tour = dp_directions(instance, paths, greedy_construct(instance, paths));
      result.best_cost = result.best_tour.cost;
      result.history = {result.best_cost};
      result.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      return result;
    }
    case Algorithm::kIls:
      return ils(instance, paths, budget, rng);
    case Algorithm::kVns:
      return vns(instance, paths, budget, rng);
    case Algorithm::kEa:
      return ea(instance, paths, budget, rng, EaOptions{options.pop, {}});
    case Algorithm::kAco: {
      AcoOptions aco_options;
      aco_options.p_max = options.pop;
      aco_options.eta_mode = options.eta_mode;
      return aco(instance, paths, budget, rng, aco_options);
    }
    case Algorithm::kExact:
      return exact_optimum(instance, paths);
  }
  throw Error("unreachable algorithm");
}

}  // namespace cpplc
