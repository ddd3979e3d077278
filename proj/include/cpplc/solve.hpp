#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cpplc/aco.hpp"
#include "cpplc/instance.hpp"
#include "cpplc/metaheuristics.hpp"
#include "cpplc/shortest_paths.hpp"

namespace cpplc {

enum class Algorithm { kGhc, kIls, kVns, kEa, kAco, kExact };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm alg);

struct SolveOptions {
  Algorithm algorithm = Algorithm::kEa;
  std::uint64_t seed = 1;
  int iters = 100;
  std::optional<std::int64_t> max_evals;
  std::size_t pop = 10;
  EtaMode eta_mode = EtaMode::kSqrt;
};

/// Runs one algorithm with a fresh budget and an Rng seeded from options.seed.
SolveResult solve(const Instance& instance, const ShortestPaths& paths,
                  const SolveOptions& options);

}  // namespace cpplc
