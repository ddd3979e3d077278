#include "cpplc/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>

#include "cpplc/construction.hpp"
#include "cpplc/tour_eval.hpp"

namespace cpplc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Depth-first enumeration of service orders in lexicographic order. Each level
// carries the forward DP over the prefix: best[d] is the cheapest cost of the
// prefix ending with its last edge serviced in direction d.
class PermutationSearch {
 public:
  PermutationSearch(const Instance& instance, const ShortestPaths& paths, double bound)
      : instance_(instance),
        paths_(paths),
        m_(instance.edge_count()),
        used_(static_cast<std::size_t>(m_) + 1, false),
        bound_(bound) {
    prefix_.reserve(static_cast<std::size_t>(m_));
    for (const Edge& e : instance.edges()) {
      remaining_service_floor_ += (instance.curb_weight() + e.demand / 2.0) * e.length;
    }
  }

  void run() {
    const std::array<double, 2> start = {0.0, kInf};
    extend(start, 0.0, remaining_service_floor_);
  }

  const AbbreviatedTour& best_order() const { return best_order_; }
  double best_cost() const { return best_cost_; }
  std::int64_t leaves() const { return leaves_; }

 private:
  NodeId prefix_exit(Direction dir) const {
    if (prefix_.empty()) return kDepot;
    return exit_node(instance_.edge(prefix_.back()), dir);
  }

  void extend(const std::array<double, 2>& best, double served, double service_floor) {
    const double w = instance_.curb_weight();
    if (static_cast<int>(prefix_.size()) == m_) {
      ++leaves_;
      double total = kInf;
      for (Direction d : {Direction::kForward, Direction::kBackward}) {
        const std::size_t i = static_cast<std::size_t>(d) - 1;
        total = std::min(total, best[i] + w * paths_.dist(prefix_exit(d), kDepot));
      }
      if (total < best_cost_) {
        best_cost_ = total;
        best_order_ = prefix_;
        bound_ = std::min(bound_, total);
      }
      return;
    }
    if (std::min(best[0], best[1]) + service_floor > bound_ + tolerance()) return;

    const double on_board = instance_.total_demand() - served;
    for (EdgeId id = 1; id <= m_; ++id) {
      if (used_[id]) continue;
      const Edge& e = instance_.edge(id);
      const double service = (w + on_board - e.demand / 2.0) * e.length;
      std::array<double, 2> next = {kInf, kInf};
      for (Direction prev : {Direction::kForward, Direction::kBackward}) {
        const double base = best[static_cast<std::size_t>(prev) - 1];
        if (base == kInf) continue;
        const NodeId at = prefix_exit(prev);
        for (Direction dir : {Direction::kForward, Direction::kBackward}) {
          const double c = base + (w + on_board) * paths_.dist(at, entry_node(e, dir)) + service;
          double& slot = next[static_cast<std::size_t>(dir) - 1];
          slot = std::min(slot, c);
        }
      }
      used_[id] = true;
      prefix_.push_back(id);
      extend(next, served + e.demand, service_floor - (w + e.demand / 2.0) * e.length);
      prefix_.pop_back();
      used_[id] = false;
    }
  }

  double tolerance() const { return 1e-9 * std::max(1.0, std::abs(bound_)); }

  const Instance& instance_;
  const ShortestPaths& paths_;
  int m_;
  std::vector<bool> used_;
  AbbreviatedTour prefix_;
  double remaining_service_floor_ = 0.0;
  double bound_;
  double best_cost_ = kInf;
  AbbreviatedTour best_order_;
  std::int64_t leaves_ = 0;
};

}  // namespace

SolveResult exact_optimum(const Instance& instance, const ShortestPaths& paths, int limit) {
  if (instance.edge_count() > limit) {
    throw OracleLimitExceeded("exact_optimum: " + std::to_string(instance.edge_count()) +
                              " edges exceeds the limit of " + std::to_string(limit));
  }
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  const AbbreviatedTour greedy = greedy_construct(instance, paths);
  PermutationSearch search(instance, paths, dp_cost(instance, paths, greedy));
  search.run();

  SolveResult result;
  result.best_tour = dp_directions(instance, paths, search.best_order());
  result.best_cost = result.best_tour.cost;
  result.evals_used = search.leaves();
  result.iters_done = 1;
  result.history = {result.best_cost};
  result.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

double direction_bruteforce(const Instance& instance, const ShortestPaths& paths,
                            const AbbreviatedTour& tour, int limit) {
  const int m = static_cast<int>(tour.size());
  if (m > limit) {
    throw OracleLimitExceeded("direction_bruteforce: " + std::to_string(m) +
                              " edges exceeds the limit of " + std::to_string(limit));
  }
  check_permutation(tour, instance.edge_count());
  std::vector<ServiceStep> steps(tour.size());
  double best = kInf;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    for (int k = 0; k < m; ++k) {
      steps[k] = {tour[k], (mask >> k) & 1u ? Direction::kBackward : Direction::kForward};
    }
    best = std::min(best, evaluate_directed(instance, paths, steps));
  }
  return best;
}

}  // namespace cpplc
