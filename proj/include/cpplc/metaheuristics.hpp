#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cpplc/budget.hpp"
#include "cpplc/instance.hpp"
#include "cpplc/local_search.hpp"
#include "cpplc/shortest_paths.hpp"
#include "cpplc/tour.hpp"

namespace cpplc {

struct SolveResult {
  DirectedTour best_tour;  // directions from dp_directions on the best order
  double best_cost = 0.0;
  std::int64_t evals_used = 0;
  int iters_done = 0;
  double wall_seconds = 0.0;
  std::vector<double> history;  // best cost after each outer iteration
};

/// Iterated local search. Every iteration perturbs the current tour, then
/// repeatedly applies whichever of 1-opt, 2-opt, 2-exchange yields the cheapest
/// tour until none improves. The result replaces the incumbent only if it is
/// strictly better, otherwise the search restarts from the incumbent.
SolveResult ils(const Instance& instance, const ShortestPaths& paths, Budget& budget, Rng& rng);

/// Variable neighborhood search: like ils, but the descent tries 2-exchange,
/// 1-opt, 2-opt in that order, applies the first one that improves and starts
/// over from 2-exchange.
SolveResult vns(const Instance& instance, const ShortestPaths& paths, Budget& budget, Rng& rng);

/// Population of distinct tours, ascending by cost.
class Population {
 public:
  explicit Population(std::size_t capacity) : capacity_(capacity) {}

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<ScoredTour>& members() const { return members_; }
  const ScoredTour& best() const { return members_.front(); }

  bool contains(const AbbreviatedTour& tour) const;

  /// Keeps the cheapest `capacity` distinct tours of members ∪ pool. Ties on
  /// cost keep current members first, then pool order.
  void select_from(std::vector<ScoredTour> pool);

 private:
  std::size_t capacity_;
  std::vector<ScoredTour> members_;
};

struct EaOptions {
  std::size_t p_max = 10;
  /// Called with (generation, population) after seeding (generation 0) and
  /// after every selection step.
  std::function<void(int, const Population&)> observer;
};

/// Evolutionary algorithm: each generation breeds one child per member with a
/// random distinct mate, mutates every member with the three local-search
/// operators, and keeps the best p_max distinct tours of parents and offspring.
SolveResult ea(const Instance& instance, const ShortestPaths& paths, Budget& budget, Rng& rng,
               const EaOptions& options = {});

/// Randomized merge of two parent orders. Each step draws c in {1, 2}; the
/// chosen parent's cursor advances and its edge is appended unless already in
/// the child. When either cursor runs off its parent the remaining edges of
/// parent_a, then parent_b, are appended in order.
AbbreviatedTour mix_crossover(const AbbreviatedTour& parent_a, const AbbreviatedTour& parent_b,
                              const std::function<int()>& draw);
AbbreviatedTour mix_crossover(const AbbreviatedTour& parent_a, const AbbreviatedTour& parent_b,
                              Rng& rng);

}  // namespace cpplc
