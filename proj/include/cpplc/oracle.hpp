#pragma once

#include "cpplc/instance.hpp"
#include "cpplc/metaheuristics.hpp"
#include "cpplc/shortest_paths.hpp"
#include "cpplc/tour.hpp"

namespace cpplc {

class OracleLimitExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExactEdgeLimit = 9;
inline constexpr int kDirectionBruteforceLimit = 14;

/// Exhaustive search over all m! service orders (the DP already optimizes the
/// directions). Orders are enumerated lexicographically with branch and bound,
/// so the returned order is the lexicographically smallest optimal one.
/// evals_used counts complete orders priced. Throws OracleLimitExceeded if
/// m > limit.
SolveResult exact_optimum(const Instance& instance, const ShortestPaths& paths,
                          int limit = kExactEdgeLimit);

/// Minimum of evaluate_directed over all 2^m direction vectors of `tour`.
double direction_bruteforce(const Instance& instance, const ShortestPaths& paths,
                            const AbbreviatedTour& tour, int limit = kDirectionBruteforceLimit);

}  // namespace cpplc
