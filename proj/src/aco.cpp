#include "cpplc/aco.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <utility>

#include "cpplc/construction.hpp"
#include "cpplc/tour_eval.hpp"

namespace cpplc {

namespace {

// Zero-length moves would give eta = 0 (or infinity in inverse mode).
constexpr double kCostFloor = 1e-12;

double attractiveness(double cost_like, EtaMode mode) {
  const double root = std::sqrt(std::max(cost_like, kCostFloor));
  return mode == EtaMode::kSqrt ? root : 1.0 / root;
}

}  // namespace

PheromoneTable::PheromoneTable(const Instance& instance, const ShortestPaths& paths,
                               const AcoOptions& options)
    : targets_(2 * static_cast<std::size_t>(instance.edge_count())),
      rho_(options.rho),
      deposit_(options.deposit),
      tau_((targets_ + 1) * targets_, options.initial_tau),
      eta_((targets_ + 1) * targets_, 0.0) {
  const double w = instance.curb_weight();
  const double total = instance.total_demand();
  for (std::size_t to = 0; to < targets_; ++to) {
    const ServiceStep target = step_of(to);
    const Edge& e = instance.edge(target.edge);
    const NodeId entry = entry_node(e, target.dir);

    for (std::size_t from = 0; from < targets_; ++from) {
      const ServiceStep source = step_of(from);
      const NodeId departure = exit_node(instance.edge(source.edge), source.dir);
      const double c = (w + e.demand) * paths.dist(departure, entry) + (w + e.demand / 2.0) * e.length;
      eta_[from * targets_ + to] = attractiveness(c, options.eta_mode);
    }
    const double c = (w + total) * paths.dist(kDepot, entry) + (w + total - e.demand / 2.0) * e.length;
    eta_[start_state() * targets_ + to] = attractiveness(c, options.eta_mode);
  }
}

double PheromoneTable::deposit_amount(double tour_cost) const {
  return deposit_ / std::sqrt(std::max(tour_cost, kCostFloor));
}

void PheromoneTable::update(std::span<const std::vector<ServiceStep>> trails,
                            std::span<const double> costs) {
  for (double& t : tau_) t *= (1.0 - rho_);
  for (std::size_t a = 0; a < trails.size(); ++a) {
    const double amount = deposit_amount(costs[a]);
    std::size_t from = start_state();
    for (const ServiceStep& step : trails[a]) {
      const std::size_t to = state_of(step);
      tau_[from * targets_ + to] += amount;
      from = to;
    }
  }
}

std::vector<std::pair<std::size_t, double>> transition_probabilities(
    const PheromoneTable& table, std::size_t from, const std::vector<bool>& edge_available) {
  std::vector<std::pair<std::size_t, double>> out;
  double total = 0.0;
  for (std::size_t to = 0; to < table.service_state_count(); ++to) {
    if (!edge_available[to / 2 + 1]) continue;
    const double weight = table.tau(from, to) * table.eta(from, to);
    out.emplace_back(to, weight);
    total += weight;
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    for (auto& entry : out) entry.second = 1.0 / static_cast<double>(out.size());
    return out;
  }
  for (auto& entry : out) entry.second /= total;
  return out;
}

std::vector<ServiceStep> aco_sample(const Instance& instance, const PheromoneTable& table,
                                    Rng& rng) {
  const int m = instance.edge_count();
  std::vector<bool> available(static_cast<std::size_t>(m) + 1, true);
  available[0] = false;
  std::vector<ServiceStep> trail;
  trail.reserve(static_cast<std::size_t>(m));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::size_t at = table.start_state();
  for (int step = 0; step < m; ++step) {
    const auto probs = transition_probabilities(table, at, available);
    const double u = unit(rng);
    std::size_t chosen = probs.back().first;
    double cumulative = 0.0;
    for (const auto& [state, p] : probs) {
      cumulative += p;
      if (u < cumulative) {
        chosen = state;
        break;
      }
    }
    const ServiceStep picked = PheromoneTable::step_of(chosen);
    trail.push_back(picked);
    available[static_cast<std::size_t>(picked.edge)] = false;
    at = chosen;
  }
  return trail;
}

SolveResult aco(const Instance& instance, const ShortestPaths& paths, Budget& budget, Rng& rng,
                const AcoOptions& options, const AcoObserver& observer) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();

  AbbreviatedTour best_order = greedy_construct(instance, paths);
  double best_cost = detail::dp_cost_unchecked(instance, paths, best_order);
  PheromoneTable table(instance, paths, options);

  std::vector<double> history;
  std::vector<std::vector<ServiceStep>> trails;
  std::vector<double> costs;
  AbbreviatedTour order;
  int iters = 0;
  for (; iters < budget.max_iters() && !budget.exhausted(); ++iters) {
    trails.clear();
    costs.clear();
    for (std::size_t a = 0; a < options.p_max; ++a) {
      std::vector<ServiceStep> trail = aco_sample(instance, table, rng);
      if (!budget.consume()) break;
      order.clear();
      for (const ServiceStep& s : trail) order.push_back(s.edge);
      const double cost = detail::dp_cost_unchecked(instance, paths, order);
      if (cost < best_cost) {
        best_cost = cost;
        best_order = order;
      }
      trails.push_back(std::move(trail));
      costs.push_back(cost);
    }
    table.update(trails, costs);
    history.push_back(best_cost);
    if (observer) observer(iters + 1, table);
  }

  SolveResult result;
  result.best_tour = dp_directions(instance, paths, best_order);
  result.best_cost = result.best_tour.cost;
  result.evals_used = budget.evals_used();
  result.iters_done = iters;
  result.history = std::move(history);
  result.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

}  // namespace cpplc
