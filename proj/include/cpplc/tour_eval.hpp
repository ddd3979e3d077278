#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cpplc/instance.hpp"
#include "cpplc/shortest_paths.hpp"
#include "cpplc/tour.hpp"

namespace cpplc {

// Cost model. Servicing edge e with Q_e on board costs d_e * (W + Q_e - q_e / 2);
// deadheading any distance x with Q on board costs x * (W + Q). Deadheads always
// follow shortest paths, so a tour is fully priced by its service order and the
// direction of each service traversal.

/// Load on board just before servicing each position of `tour`:
/// Q_1 = Q, Q_{k+1} = Q_k - q_{tour[k]}. Computed as suffix sums, so the last
/// entry is exactly the demand of the last edge.
std::vector<double> load_prefixes(const Instance& instance, std::span<const EdgeId> tour);

/// Counts the branch evaluations the DP performs (one per min() candidate).
struct DpCounter {
  std::uint64_t branch_evaluations = 0;
};

/// Minimum cost over all 2^m direction assignments of `tour`, in O(m) after the
/// shortest-path precompute. Throws InvalidTour if `tour` is not a permutation.
double dp_cost(const Instance& instance, const ShortestPaths& paths,
               std::span<const EdgeId> tour, DpCounter* counter = nullptr);

/// Same as dp_cost, plus the argmin directions. Ties prefer Direction::kForward.
/// The returned cost is bit-identical to dp_cost(tour).
DirectedTour dp_directions(const Instance& instance, const ShortestPaths& paths,
                           std::span<const EdgeId> tour);

/// Cost of a tour with fixed directions.
double evaluate_directed(const Instance& instance, const ShortestPaths& paths,
                         std::span<const ServiceStep> steps);

/// One traversal of the closed walk. `edge` is the serviced edge id, or 0 for a
/// deadhead hop along a shortest path.
struct Traversal {
  NodeId from = 0;
  NodeId to = 0;
  EdgeId edge = 0;
  bool serviced = false;
  double load = 0.0;  // on board when the traversal starts

  bool operator==(const Traversal&) const = default;
};

/// The full closed walk from the depot back to the depot.
std::vector<Traversal> expand_walk(const Instance& instance, const ShortestPaths& paths,
                                   const DirectedTour& tour);

/// "(1,2),(2,3),[3,2],..." with parentheses for service, brackets for deadhead.
std::string format_walk(std::span<const Traversal> walk);

/// Prices a walk traversal by traversal. Deadhead hops are priced by the node
/// pair distance, service hops by the serviced edge.
double walk_cost(const Instance& instance, const ShortestPaths& paths,
                 std::span<const Traversal> walk);

namespace detail {

/// dp_cost without the permutation check, for search loops that only ever
/// produce permutations.
double dp_cost_unchecked(const Instance& instance, const ShortestPaths& paths,
                         std::span<const EdgeId> tour, DpCounter* counter = nullptr);

}  // namespace detail

}  // namespace cpplc
