#include "cpplc/metaheuristics.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <utility>

#include "cpplc/construction.hpp"
#include "cpplc/tour_eval.hpp"

namespace cpplc {

namespace {

using Clock = std::chrono::steady_clock;

ScoredTour greedy_seed(const Instance& instance, const ShortestPaths& paths) {
  AbbreviatedTour seed = greedy_construct(instance, paths);
  const double cost = detail::dp_cost_unchecked(instance, paths, seed);
  return {std::move(seed), cost};
}

SolveResult finish(const Instance& instance, const ShortestPaths& paths, const ScoredTour& best,
                   const Budget& budget, Clock::time_point started, int iters,
                   std::vector<double> history) {
  SolveResult result;
  result.best_tour = dp_directions(instance, paths, best.tour);
  result.best_cost = result.best_tour.cost;
  result.evals_used = budget.evals_used();
  result.iters_done = iters;
  result.history = std::move(history);
  result.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

constexpr Operator kAllOperators[] = {Operator::kOneOpt, Operator::kTwoOpt,
                                      Operator::kTwoExchange};
constexpr Operator kVnsOrder[] = {Operator::kTwoExchange, Operator::kOneOpt, Operator::kTwoOpt};

void descend_best_of(const Instance& instance, const ShortestPaths& paths, ScoredTour& current,
                     Budget& budget) {
  while (!budget.exhausted()) {
    ScoredTour best_move = current;
    for (Operator op : kAllOperators) {
      ScoredTour moved = apply_operator(op, instance, paths, current, budget);
      if (moved.cost < best_move.cost) best_move = std::move(moved);
    }
    if (!(best_move.cost < current.cost)) return;
    current = std::move(best_move);
  }
}

void descend_first_improving(const Instance& instance, const ShortestPaths& paths,
                             ScoredTour& current, Budget& budget) {
  bool improved = true;
  while (improved && !budget.exhausted()) {
    improved = false;
    for (Operator op : kVnsOrder) {
      ScoredTour moved = apply_operator(op, instance, paths, current, budget);
      if (moved.cost < current.cost) {
        current = std::move(moved);
        improved = true;
        break;
      }
    }
  }
}

template <typename Descend>
SolveResult perturb_and_descend(const Instance& instance, const ShortestPaths& paths,
                                Budget& budget, Rng& rng, Descend descend) {
  const auto started = Clock::now();
  ScoredTour best = greedy_seed(instance, paths);
  ScoredTour current = best;
  const int strength = perturbation_strength(instance.edge_count());
  std::vector<double> history;
  int iters = 0;
  for (; iters < budget.max_iters(); ++iters) {
    current.tour = perturb(std::move(current.tour), strength, rng);
    if (!budget.consume()) break;
    current.cost = detail::dp_cost_unchecked(instance, paths, current.tour);
    descend(instance, paths, current, budget);
    if (current.cost < best.cost) {
      best = current;
    } else {
      current = best;
    }
    history.push_back(best.cost);
  }
  return finish(instance, paths, best, budget, started, iters, std::move(history));
}

}  // namespace

SolveResult ils(const Instance& instance, const ShortestPaths& paths, Budget& budget, Rng& rng) {
  return perturb_and_descend(instance, paths, budget, rng, descend_best_of);
}

SolveResult vns(const Instance& instance, const ShortestPaths& paths, Budget& budget, Rng& rng) {
  return perturb_and_descend(instance, paths, budget, rng, descend_first_improving);
}

bool Population::contains(const AbbreviatedTour& tour) const {
  return std::any_of(members_.begin(), members_.end(),
                     [&](const ScoredTour& m) { return m.tour == tour; });
}

void Population::select_from(std::vector<ScoredTour> pool) {
  std::vector<ScoredTour> all = std::move(members_);
  all.insert(all.end(), std::make_move_iterator(pool.begin()),
             std::make_move_iterator(pool.end()));
  std::stable_sort(all.begin(), all.end(),
                   [](const ScoredTour& a, const ScoredTour& b) { return a.cost < b.cost; });
  members_.clear();
  std::set<AbbreviatedTour> seen;
  for (ScoredTour& candidate : all) {
    if (members_.size() == capacity_) break;
    if (seen.insert(candidate.tour).second) members_.push_back(std::move(candidate));
  }
}

AbbreviatedTour mix_crossover(const AbbreviatedTour& parent_a, const AbbreviatedTour& parent_b,
                              const std::function<int()>& draw) {
  {
    AbbreviatedTour sa = parent_a;
    AbbreviatedTour sb = parent_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb || std::adjacent_find(sa.begin(), sa.end()) != sa.end()) {
      throw InvalidTour("mix_crossover: parents are not permutations of the same edge set");
    }
  }
  const std::size_t m = parent_a.size();
  AbbreviatedTour child;
  child.reserve(m);
  std::set<EdgeId> taken;
  auto take = [&](EdgeId e) {
    if (taken.insert(e).second) child.push_back(e);
  };

  std::size_t s = 0;
  std::size_t t = 0;
  while (s < m && t < m && child.size() < m) {
    if (draw() == 1) {
      take(parent_a[s++]);
    } else {
      take(parent_b[t++]);
    }
  }
  for (EdgeId e : parent_a) take(e);
  for (EdgeId e : parent_b) take(e);
  return child;
}

AbbreviatedTour mix_crossover(const AbbreviatedTour& parent_a, const AbbreviatedTour& parent_b,
                              Rng& rng) {
  std::uniform_int_distribution<int> coin(1, 2);
  return mix_crossover(parent_a, parent_b, [&] { return coin(rng); });
}

SolveResult ea(const Instance& instance, const ShortestPaths& paths, Budget& budget, Rng& rng,
               const EaOptions& options) {
  if (options.p_max < 2) throw Error("ea: p_max must be at least 2");
  const auto started = Clock::now();
  const ScoredTour seed = greedy_seed(instance, paths);
  const int strength = perturbation_strength(instance.edge_count());

  Population population(options.p_max);
  std::vector<ScoredTour> initial{seed};
  for (std::size_t k = 1; k < options.p_max; ++k) {
    AbbreviatedTour tour = perturb(seed.tour, strength, rng);
    if (!budget.consume()) break;
    const double cost = detail::dp_cost_unchecked(instance, paths, tour);
    initial.push_back({std::move(tour), cost});
  }
  population.select_from(std::move(initial));
  if (options.observer) options.observer(0, population);

  std::vector<double> history;
  int generation = 0;
  for (; generation < budget.max_iters() && !budget.exhausted(); ++generation) {
    const std::vector<ScoredTour> parents = population.members();
    std::vector<ScoredTour> offspring;

    if (parents.size() >= 2) {
      std::uniform_int_distribution<std::size_t> other(0, parents.size() - 2);
      for (std::size_t i = 0; i < parents.size(); ++i) {
        std::size_t mate = other(rng);
        if (mate >= i) ++mate;
        AbbreviatedTour child = mix_crossover(parents[i].tour, parents[mate].tour, rng);
        if (!budget.consume()) break;
        const double cost = detail::dp_cost_unchecked(instance, paths, child);
        offspring.push_back({std::move(child), cost});
      }
    }
    for (const ScoredTour& parent : parents) {
      for (Operator op : kAllOperators) {
        offspring.push_back(apply_operator(op, instance, paths, parent, budget));
      }
    }

    population.select_from(std::move(offspring));
    history.push_back(population.best().cost);
    if (options.observer) options.observer(generation + 1, population);
  }
  return finish(instance, paths, population.best(), budget, started, generation,
                std::move(history));
}

}  // namespace cpplc
