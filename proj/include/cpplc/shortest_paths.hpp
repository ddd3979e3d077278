#pragma once

#include <vector>

#include "cpplc/instance.hpp"

namespace cpplc {

/// All-pairs shortest-path lengths over edge lengths, with next-hop tables for
/// path reconstruction. Node ids are 1-based. Immutable once built.
class ShortestPaths {
 public:
  ShortestPaths() = default;

  int node_count() const { return n_; }

  double dist(NodeId from, NodeId to) const { return dist_[index(from, to)]; }

  /// Node following `from` on the stored shortest path to `to`; 0 when
  /// from == to or `to` is unreachable.
  NodeId next_hop(NodeId from, NodeId to) const { return next_[index(from, to)]; }

  /// Node sequence from `from` to `to`, both included. Just {from} when equal.
  std::vector<NodeId> path(NodeId from, NodeId to) const;

 private:
  friend ShortestPaths all_pairs_shortest_paths(const Instance& instance);

  std::size_t index(NodeId from, NodeId to) const {
    return static_cast<std::size_t>(from - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(to - 1);
  }

  int n_ = 0;
  std::vector<double> dist_;
  std::vector<NodeId> next_;
};

/// Floyd-Warshall. Relaxations only replace a path on strict improvement, so
/// with the k, i, j loop order the first-found path wins ties.
ShortestPaths all_pairs_shortest_paths(const Instance& instance);

}  // namespace cpplc
