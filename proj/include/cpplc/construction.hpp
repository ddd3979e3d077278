#pragma once

#include "cpplc/instance.hpp"
#include "cpplc/shortest_paths.hpp"
#include "cpplc/tour.hpp"

namespace cpplc {

/// Greedy insertion. Edges are taken by decreasing d_e * q_e (stable on edge
/// id) and each is inserted at the position of the partial tour that
/// minimizes its DP cost, earliest position on ties. O(m^3).
AbbreviatedTour greedy_construct(const Instance& instance, const ShortestPaths& paths);

/// The insertion order used by greedy_construct.
std::vector<EdgeId> greedy_insertion_order(const Instance& instance);

}  // namespace cpplc
