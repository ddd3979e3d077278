#include "cpplc/tour_eval.hpp"

#include <array>
#include <sstream>

namespace cpplc {

AbbreviatedTour DirectedTour::order() const {
  AbbreviatedTour seq;
  seq.reserve(steps.size());
  for (const ServiceStep& s : steps) seq.push_back(s.edge);
  return seq;
}

bool is_permutation_of_edges(std::span<const EdgeId> seq, int edge_count) {
  if (static_cast<int>(seq.size()) != edge_count) return false;
  std::vector<bool> seen(static_cast<std::size_t>(edge_count) + 1, false);
  for (EdgeId id : seq) {
    if (id < 1 || id > edge_count || seen[id]) return false;
    seen[id] = true;
  }
  return true;
}

void check_permutation(std::span<const EdgeId> seq, int edge_count) {
  if (static_cast<int>(seq.size()) != edge_count) {
    throw InvalidTour("invalid tour: expected " + std::to_string(edge_count) + " edges, got " +
                      std::to_string(seq.size()));
  }
  std::vector<bool> seen(static_cast<std::size_t>(edge_count) + 1, false);
  for (EdgeId id : seq) {
    if (id < 1 || id > edge_count) {
      throw InvalidTour("invalid tour: edge id " + std::to_string(id) + " out of range");
    }
    if (seen[id]) throw InvalidTour("invalid tour: duplicate edge id " + std::to_string(id));
    seen[id] = true;
  }
}

AbbreviatedTour identity_tour(int edge_count) {
  AbbreviatedTour seq(static_cast<std::size_t>(edge_count));
  for (int i = 0; i < edge_count; ++i) seq[i] = i + 1;
  return seq;
}

std::vector<double> load_prefixes(const Instance& instance, std::span<const EdgeId> tour) {
  check_permutation(tour, instance.edge_count());
  std::vector<double> loads(tour.size());
  double on_board = 0.0;
  for (std::size_t k = tour.size(); k-- > 0;) {
    on_board += instance.edge(tour[k]).demand;
    loads[k] = on_board;
  }
  return loads;
}

namespace {

using Choice = std::array<Direction, 2>;

// Backward pass over positions m-1..0. `next` holds f_{k+1}(d): the cost of
// finishing the tour once position k has been serviced in direction d. Each
// position is evaluated once per direction of the previous edge (the depot
// stands in for the previous exit at position 0).
double run_dp(const Instance& instance, const ShortestPaths& paths,
              std::span<const EdgeId> tour, DpCounter* counter, std::vector<Choice>* choices) {
  const double w = instance.curb_weight();
  const std::size_t m = tour.size();
  if (m == 0) return 0.0;
  const Edge& last = instance.edge(tour[m - 1]);
  std::array<double, 2> next = {w * paths.dist(exit_node(last, Direction::kForward), kDepot),
                                w * paths.dist(exit_node(last, Direction::kBackward), kDepot)};
  std::uint64_t branches = 0;
  double on_board = 0.0;
  double result = 0.0;

  for (std::size_t k = m; k-- > 0;) {
    const Edge& e = instance.edge(tour[k]);
    on_board += e.demand;
    const double service = (w + on_board - e.demand / 2.0) * e.length;
    const double carry = w + on_board;

    auto best_from = [&](NodeId at, Direction& pick) {
      const double forward = carry * paths.dist(at, e.u) + next[0];
      const double backward = carry * paths.dist(at, e.v) + next[1];
      branches += 2;
      if (forward <= backward) {
        pick = Direction::kForward;
        return service + forward;
      }
      pick = Direction::kBackward;
      return service + backward;
    };

    Choice pick{};
    if (k == 0) {
      result = best_from(kDepot, pick[0]);
      pick[1] = pick[0];
    } else {
      const Edge& prev = instance.edge(tour[k - 1]);
      const double after_forward = best_from(exit_node(prev, Direction::kForward), pick[0]);
      const double after_backward = best_from(exit_node(prev, Direction::kBackward), pick[1]);
      next = {after_forward, after_backward};
    }
    if (choices != nullptr) (*choices)[k] = pick;
  }
  if (counter != nullptr) counter->branch_evaluations += branches;
  return result;
}

}  // namespace

namespace detail {

double dp_cost_unchecked(const Instance& instance, const ShortestPaths& paths,
                         std::span<const EdgeId> tour, DpCounter* counter) {
  return run_dp(instance, paths, tour, counter, nullptr);
}

}  // namespace detail

double dp_cost(const Instance& instance, const ShortestPaths& paths,
               std::span<const EdgeId> tour, DpCounter* counter) {
  check_permutation(tour, instance.edge_count());
  return run_dp(instance, paths, tour, counter, nullptr);
}

DirectedTour dp_directions(const Instance& instance, const ShortestPaths& paths,
                           std::span<const EdgeId> tour) {
  check_permutation(tour, instance.edge_count());
  std::vector<Choice> choices(tour.size());
  DirectedTour out;
  out.cost = run_dp(instance, paths, tour, nullptr, &choices);
  out.steps.reserve(tour.size());
  Direction prev = Direction::kForward;
  for (std::size_t k = 0; k < tour.size(); ++k) {
    const Direction dir = choices[k][static_cast<std::size_t>(prev) - 1];
    out.steps.push_back({tour[k], dir});
    prev = dir;
  }
  return out;
}

double evaluate_directed(const Instance& instance, const ShortestPaths& paths,
                         std::span<const ServiceStep> steps) {
  AbbreviatedTour order;
  order.reserve(steps.size());
  for (const ServiceStep& s : steps) order.push_back(s.edge);
  const std::vector<double> loads = load_prefixes(instance, order);

  const double w = instance.curb_weight();
  double cost = 0.0;
  NodeId at = kDepot;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Edge& e = instance.edge(steps[k].edge);
    cost += (w + loads[k]) * paths.dist(at, entry_node(e, steps[k].dir));
    cost += (w + loads[k] - e.demand / 2.0) * e.length;
    at = exit_node(e, steps[k].dir);
  }
  cost += w * paths.dist(at, kDepot);
  return cost;
}

std::vector<Traversal> expand_walk(const Instance& instance, const ShortestPaths& paths,
                                   const DirectedTour& tour) {
  const std::vector<double> loads = load_prefixes(instance, tour.order());
  std::vector<Traversal> walk;

  auto deadhead = [&](NodeId from, NodeId to, double load) {
    const std::vector<NodeId> nodes = paths.path(from, to);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      walk.push_back({nodes[i - 1], nodes[i], 0, false, load});
    }
  };

  NodeId at = kDepot;
  for (std::size_t k = 0; k < tour.steps.size(); ++k) {
    const ServiceStep& step = tour.steps[k];
    const Edge& e = instance.edge(step.edge);
    deadhead(at, entry_node(e, step.dir), loads[k]);
    walk.push_back({entry_node(e, step.dir), exit_node(e, step.dir), step.edge, true, loads[k]});
    at = exit_node(e, step.dir);
  }
  deadhead(at, kDepot, 0.0);
  return walk;
}

std::string format_walk(std::span<const Traversal> walk) {
  std::ostringstream out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i > 0) out << ',';
    const Traversal& t = walk[i];
    out << (t.serviced ? '(' : '[') << t.from << ',' << t.to << (t.serviced ? ')' : ']');
  }
  return out.str();
}

double walk_cost(const Instance& instance, const ShortestPaths& paths,
                 std::span<const Traversal> walk) {
  const double w = instance.curb_weight();
  double cost = 0.0;
  for (const Traversal& t : walk) {
    if (t.serviced) {
      const Edge& e = instance.edge(t.edge);
      cost += (w + t.load - e.demand / 2.0) * e.length;
    } else {
      cost += (w + t.load) * paths.dist(t.from, t.to);
    }
  }
  return cost;
}

}  // namespace cpplc
