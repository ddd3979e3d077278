#include "cpplc/shortest_paths.hpp"

#include <limits>

namespace cpplc {

ShortestPaths all_pairs_shortest_paths(const Instance& instance) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  ShortestPaths sp;
  const int n = instance.node_count();
  sp.n_ = n;
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  sp.dist_.assign(cells, kInf);
  sp.next_.assign(cells, 0);

  for (NodeId v = 1; v <= n; ++v) sp.dist_[sp.index(v, v)] = 0.0;
  // Among parallel edges the first strictly shortest one defines the hop.
  for (const Edge& e : instance.edges()) {
    if (e.length < sp.dist_[sp.index(e.u, e.v)]) {
      sp.dist_[sp.index(e.u, e.v)] = e.length;
      sp.dist_[sp.index(e.v, e.u)] = e.length;
      sp.next_[sp.index(e.u, e.v)] = e.v;
      sp.next_[sp.index(e.v, e.u)] = e.u;
    }
  }

  for (NodeId k = 1; k <= n; ++k) {
    for (NodeId i = 1; i <= n; ++i) {
      const double ik = sp.dist_[sp.index(i, k)];
      if (ik == kInf) continue;
      for (NodeId j = 1; j <= n; ++j) {
        const double through = ik + sp.dist_[sp.index(k, j)];
        if (through < sp.dist_[sp.index(i, j)]) {
          sp.dist_[sp.index(i, j)] = through;
          sp.next_[sp.index(i, j)] = sp.next_[sp.index(i, k)];
        }
      }
    }
  }
  return sp;
}

std::vector<NodeId> ShortestPaths::path(NodeId from, NodeId to) const {
  std::vector<NodeId> nodes{from};
  if (from == to) return nodes;
  if (next_hop(from, to) == 0) return {};
  NodeId at = from;
  while (at != to) {
    at = next_hop(at, to);
    nodes.push_back(at);
  }
  return nodes;
}

}  // namespace cpplc
