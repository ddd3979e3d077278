#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cpplc/instance.hpp"

namespace cpplc {

/// Service order only: a permutation of the edge ids 1..m. Directions and
/// deadhead paths are recovered by the DP in tour_eval.hpp.
using AbbreviatedTour = std::vector<EdgeId>;

/// Forward traverses an edge u -> v, Backward v -> u.
enum class Direction : std::uint8_t { kForward = 1, kBackward = 2 };

struct ServiceStep {
  EdgeId edge = 0;
  Direction dir = Direction::kForward;

  bool operator==(const ServiceStep&) const = default;
};

struct DirectedTour {
  std::vector<ServiceStep> steps;
  double cost = 0.0;

  AbbreviatedTour order() const;
};

inline NodeId entry_node(const Edge& e, Direction dir) {
  return dir == Direction::kForward ? e.u : e.v;
}
inline NodeId exit_node(const Edge& e, Direction dir) {
  return dir == Direction::kForward ? e.v : e.u;
}

class InvalidTour : public Error {
 public:
  using Error::Error;
};

/// Throws InvalidTour unless `seq` holds each id in 1..edge_count exactly once.
void check_permutation(std::span<const EdgeId> seq, int edge_count);
bool is_permutation_of_edges(std::span<const EdgeId> seq, int edge_count);

/// Edge ids in file order, 1..m.
AbbreviatedTour identity_tour(int edge_count);

}  // namespace cpplc
