#pragma once

// Shared instances and independent reference implementations for the tests.
// Nothing here calls into the DP or the solvers: the reference code recomputes
// shortest paths with Dijkstra and prices tours by walking them step by step.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "cpplc/instance.hpp"
#include "cpplc/tour.hpp"

namespace cpplc::testing {

/// The four-node example: edges (1,2) d=2 q=100, (2,3) d=1 q=20, (1,4) d=1 q=10,
/// (3,4) d=10 q=5, W = 0.
inline Instance four_node() {
  return Instance(4, {{1, 2, 2, 100}, {2, 3, 1, 20}, {1, 4, 1, 10}, {3, 4, 10, 5}}, 0.0);
}

inline Instance single_edge(double length = 1, double demand = 10, double w = 0) {
  return Instance(2, {{1, 2, length, demand}}, w);
}

struct RandomInstanceSpec {
  int min_nodes = 2;
  int max_nodes = 10;
  int min_edges = 1;
  int max_edges = 10;
  int max_length = 20;
  int max_demand = 50;
};

/// Connected random multigraph with integer lengths (0 allowed) and demands.
/// W is drawn from {0, Q/2, 5Q, uniform integer}.
inline Instance random_instance(std::mt19937_64& rng, const RandomInstanceSpec& spec = {}) {
  std::uniform_int_distribution<int> edges_dist(spec.min_edges, spec.max_edges);
  const int m = edges_dist(rng);
  const int max_n = std::min(spec.max_nodes, m + 1);
  const int min_n = std::min(spec.min_nodes, max_n);
  const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  std::uniform_int_distribution<int> length(0, spec.max_length);
  std::uniform_int_distribution<int> demand(1, spec.max_demand);
  std::uniform_int_distribution<int> node(1, n);

  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) {
    const int parent = std::uniform_int_distribution<int>(1, v - 1)(rng);
    edges.push_back({parent, v, double(length(rng)), double(demand(rng))});
  }
  while (static_cast<int>(edges.size()) < m) {
    const int a = node(rng);
    const int b = node(rng);
    if (a == b) continue;
    edges.push_back({a, b, double(length(rng)), double(demand(rng))});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  for (Edge& e : edges) {
    if (rng() % 2) std::swap(e.u, e.v);
  }
  double q = 0;
  for (const Edge& e : edges) q += e.demand;
  double w = 0;
  switch (rng() % 4) {
    case 0: w = 0; break;
    case 1: w = q / 2; break;
    case 2: w = 5 * q; break;
    default: w = double(std::uniform_int_distribution<int>(0, 200)(rng)); break;
  }
  return Instance(n, std::move(edges), w);
}

inline AbbreviatedTour random_tour(int m, std::mt19937_64& rng) {
  AbbreviatedTour t(static_cast<std::size_t>(m));
  std::iota(t.begin(), t.end(), 1);
  std::shuffle(t.begin(), t.end(), rng);
  return t;
}

/// Dijkstra from every node; result indexed [from][to], 1-based.
inline std::vector<std::vector<double>> dijkstra_all(const Instance& inst) {
  const int n = inst.node_count();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<std::pair<int, double>>> adj(n + 1);
  for (const Edge& e : inst.edges()) {
    adj[e.u].push_back({e.v, e.length});
    adj[e.v].push_back({e.u, e.length});
  }
  std::vector<std::vector<double>> dist(n + 1, std::vector<double>(n + 1, inf));
  for (int s = 1; s <= n; ++s) {
    auto& d = dist[s];
    d[s] = 0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du > d[u]) continue;
      for (auto [v, w] : adj[u]) {
        if (du + w < d[v]) {
          d[v] = du + w;
          pq.push({d[v], v});
        }
      }
    }
  }
  return dist;
}

/// Prices a directed tour by simulating the vehicle: deadhead to the entry
/// node at the current load, service at the average load, unload, and finally
/// return to the depot. `dirs[k]` is 1 (u -> v) or 2 (v -> u).
inline double simulate_directed(const Instance& inst, const std::vector<std::vector<double>>& dist,
                                const std::vector<EdgeId>& order, const std::vector<int>& dirs) {
  double load = 0;
  for (const Edge& e : inst.edges()) load += e.demand;
  const double w = inst.curb_weight();
  double cost = 0;
  int at = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Edge& e = inst.edge(order[k]);
    const int from = dirs[k] == 1 ? e.u : e.v;
    const int to = dirs[k] == 1 ? e.v : e.u;
    cost += dist[at][from] * (w + load);
    cost += e.length * (w + load - e.demand / 2);
    load -= e.demand;
    at = to;
  }
  cost += dist[at][1] * w;
  return cost;
}

/// Minimum over all 2^m direction vectors using simulate_directed.
inline double brute_force_directions(const Instance& inst,
                                     const std::vector<std::vector<double>>& dist,
                                     const std::vector<EdgeId>& order) {
  const std::size_t m = order.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> dirs(m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    for (std::size_t k = 0; k < m; ++k) dirs[k] = (mask >> k) & 1u ? 2 : 1;
    best = std::min(best, simulate_directed(inst, dist, order, dirs));
  }
  return best;
}

/// Exhaustive optimum over every order and every direction vector.
inline double brute_force_optimum(const Instance& inst) {
  const auto dist = dijkstra_all(inst);
  std::vector<EdgeId> order(static_cast<std::size_t>(inst.edge_count()));
  std::iota(order.begin(), order.end(), 1);
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, brute_force_directions(inst, dist, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline bool near(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace cpplc::testing
