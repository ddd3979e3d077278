#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cpplc/budget.hpp"
#include "cpplc/instance.hpp"
#include "cpplc/metaheuristics.hpp"
#include "cpplc/shortest_paths.hpp"
#include "cpplc/tour.hpp"

namespace cpplc {

/// How the a-priori attractiveness of a move is derived from its cost-like
/// quantity c: `kSqrt` uses sqrt(c), `kInverse` uses 1 / sqrt(c).
enum class EtaMode { kSqrt, kInverse };

struct AcoOptions {
  std::size_t p_max = 10;  // ants per iteration
  double rho = 0.8;        // evaporation
  double deposit = 1.0;    // C in C / sqrt(z)
  double initial_tau = 0.001;
  EtaMode eta_mode = EtaMode::kSqrt;
};

/// Pheromone and attractiveness over the ant state space. Service states are
/// (edge, direction) pairs numbered 2*(edge-1) + (dir-1); the start state s*
/// (ant still at the depot) is numbered 2m and is never a target.
class PheromoneTable {
 public:
  PheromoneTable(const Instance& instance, const ShortestPaths& paths, const AcoOptions& options);

  std::size_t service_state_count() const { return targets_; }
  std::size_t start_state() const { return targets_; }

  static std::size_t state_of(ServiceStep step) {
    return 2 * static_cast<std::size_t>(step.edge - 1) + (static_cast<std::size_t>(step.dir) - 1);
  }
  static ServiceStep step_of(std::size_t state) {
    return {static_cast<EdgeId>(state / 2 + 1),
            state % 2 == 0 ? Direction::kForward : Direction::kBackward};
  }

  double tau(std::size_t from, std::size_t to) const { return tau_[from * targets_ + to]; }
  double eta(std::size_t from, std::size_t to) const { return eta_[from * targets_ + to]; }
  double rho() const { return rho_; }
  double deposit() const { return deposit_; }

  /// C / sqrt(z): what one ant of tour cost z lays on each transition it used.
  double deposit_amount(double tour_cost) const;

  /// tau <- (1 - rho) tau + sum over ants of the deposit on each transition
  /// that ant used. `trails[a]` is ant a's state sequence (without s*) and
  /// `costs[a]` its tour cost.
  void update(std::span<const std::vector<ServiceStep>> trails, std::span<const double> costs);

 private:
  std::size_t targets_;
  double rho_;
  double deposit_;
  std::vector<double> tau_;
  std::vector<double> eta_;
};

/// Transition distribution out of `from` over the states whose edge is still
/// available. Returns (state, probability) pairs in increasing state order.
std::vector<std::pair<std::size_t, double>> transition_probabilities(
    const PheromoneTable& table, std::size_t from, const std::vector<bool>& edge_available);

/// One ant walk from s*: m states whose edges form a permutation.
std::vector<ServiceStep> aco_sample(const Instance& instance, const PheromoneTable& table,
                                    Rng& rng);

/// Observer over each iteration's pheromone table, after the update.
using AcoObserver = std::function<void(int, const PheromoneTable&)>;

/// Ant colony optimization seeded with the greedy tour as best-so-far. Each
/// ant's tour is priced by the DP over its sampled edge order.
SolveResult aco(const Instance& instance, const ShortestPaths& paths, Budget& budget, Rng& rng,
                const AcoOptions& options = {}, const AcoObserver& observer = {});

}  // namespace cpplc
