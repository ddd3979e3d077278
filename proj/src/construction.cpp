#include "cpplc/construction.hpp"

#include <algorithm>
#include <limits>

#include "cpplc/tour_eval.hpp"

namespace cpplc {

std::vector<EdgeId> greedy_insertion_order(const Instance& instance) {
  std::vector<EdgeId> order = identity_tour(instance.edge_count());
  auto key = [&](EdgeId id) {
    const Edge& e = instance.edge(id);
    return e.length * e.demand;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return key(a) > key(b); });
  return order;
}

AbbreviatedTour greedy_construct(const Instance& instance, const ShortestPaths& paths) {
  AbbreviatedTour tour;
  tour.reserve(static_cast<std::size_t>(instance.edge_count()));
  AbbreviatedTour candidate;
  // Partial tours are priced as tours over their own edges: the vehicle only
  // carries the demand of the edges inserted so far.
  for (EdgeId id : greedy_insertion_order(instance)) {
    double best_cost = std::numeric_limits<double>::infinity();
    std::size_t best_pos = 0;
    for (std::size_t pos = 0; pos <= tour.size(); ++pos) {
      candidate = tour;
      candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(pos), id);
      const double cost = detail::dp_cost_unchecked(instance, paths, candidate);
      if (cost < best_cost) {
        best_cost = cost;
        best_pos = pos;
      }
    }
    tour.insert(tour.begin() + static_cast<std::ptrdiff_t>(best_pos), id);
  }
  return tour;
}

}  // namespace cpplc
