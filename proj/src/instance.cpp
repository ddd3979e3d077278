#include "cpplc/instance.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace cpplc {

Instance::Instance(int node_count, std::vector<Edge> edges, double curb_weight)
    : node_count_(node_count), edges_(std::move(edges)), curb_weight_(curb_weight) {
  for (const Edge& e : edges_) total_demand_ += e.demand;
}

double total_demand(const Instance& instance) { return instance.total_demand(); }

namespace {

NodeId find_root(std::vector<NodeId>& parent, NodeId x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<std::string> validate(const Instance& instance) {
  std::vector<std::string> errors;
  const int n = instance.node_count();
  if (n < 1) errors.emplace_back("no nodes: node count must be at least 1");
  if (instance.edge_count() == 0) errors.emplace_back("no edges: at least one edge is required");
  if (!std::isfinite(instance.curb_weight())) {
    errors.emplace_back("non-finite: curb weight");
  } else if (instance.curb_weight() < 0) {
    errors.emplace_back("negative curb weight");
  }

  bool endpoints_ok = n >= 1;
  for (EdgeId id = 1; id <= instance.edge_count(); ++id) {
    const Edge& e = instance.edge(id);
    const std::string tag = "edge " + std::to_string(id);
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      errors.push_back("node out of range: " + tag + " (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
      endpoints_ok = false;
    } else if (e.u == e.v) {
      errors.push_back("self-loop: " + tag + " at node " + std::to_string(e.u));
    }
    if (!std::isfinite(e.length) || !std::isfinite(e.demand)) {
      errors.push_back("non-finite: " + tag);
      continue;
    }
    if (e.length < 0) errors.push_back("negative length: " + tag);
    if (e.demand <= 0) errors.push_back("nonpositive demand: " + tag);
  }

  if (endpoints_ok) {
    std::vector<NodeId> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Edge& e : instance.edges()) {
      parent[find_root(parent, e.u)] = find_root(parent, e.v);
    }
    std::vector<NodeId> unreachable;
    const NodeId depot_root = find_root(parent, kDepot);
    for (NodeId v = 1; v <= n; ++v) {
      if (find_root(parent, v) != depot_root) unreachable.push_back(v);
    }
    if (!unreachable.empty()) {
      std::string msg = "disconnected: " + std::to_string(unreachable.size()) +
                        " node(s) unreachable from the depot, first is " +
                        std::to_string(unreachable.front());
      errors.push_back(std::move(msg));
    }
  }
  return errors;
}

}  // namespace cpplc
