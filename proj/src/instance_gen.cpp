#include "cpplc/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cpplc/budget.hpp"
#include "cpplc/shortest_paths.hpp"

namespace cpplc {

namespace {

struct Point {
  double x;
  double y;
};

double rounded_length(const Point& a, const Point& b) {
  const double d = std::round(1000.0 * std::hypot(a.x - b.x, a.y - b.y));
  return std::max(1.0, d);
}

}  // namespace

Instance generate(const GeneratorOptions& options) {
  if (options.n < 3) throw Error("generate: n must be at least 3");
  if (!(options.density > 0.0) || options.density > 1.0) {
    throw Error("generate: density must lie in (0, 1]");
  }
  Rng rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = options.n;

  std::vector<Point> coords(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) coords[v] = {unit(rng), unit(rng)};

  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::set<std::pair<NodeId, NodeId>> present;
  auto add_pair = [&](NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    if (present.insert({a, b}).second) pairs.emplace_back(a, b);
  };

  // Random spanning tree: each node in shuffled order attaches to an earlier one.
  std::vector<NodeId> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::uniform_int_distribution<std::size_t> earlier(0, i - 1);
    add_pair(order[i], order[earlier(rng)]);
  }

  const auto all_pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const auto target = std::min(
      all_pairs, static_cast<std::size_t>(std::ceil(options.density * static_cast<double>(all_pairs))));
  std::uniform_int_distribution<NodeId> node(1, n);
  while (pairs.size() < target) {
    const NodeId a = node(rng);
    const NodeId b = node(rng);
    if (a != b) add_pair(a, b);
  }

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({a, b, rounded_length(coords[a], coords[b]), 1.0});

  if (options.eulerian) {
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges) {
      ++degree[e.u];
      ++degree[e.v];
    }
    std::vector<NodeId> odd;
    for (NodeId v = 1; v <= n; ++v) {
      if (degree[v] % 2 != 0) odd.push_back(v);
    }
    std::shuffle(odd.begin(), odd.end(), rng);
    const ShortestPaths base = all_pairs_shortest_paths(Instance(n, edges, 0.0));
    const std::vector<Edge> originals = edges;
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
      const std::vector<NodeId> path = base.path(odd[i], odd[i + 1]);
      for (std::size_t h = 1; h < path.size(); ++h) {
        const NodeId a = std::min(path[h - 1], path[h]);
        const NodeId b = std::max(path[h - 1], path[h]);
        // Duplicate the shortest original edge between a and b.
        const Edge* shortest = nullptr;
        for (const Edge& e : originals) {
          if (e.u == a && e.v == b && (shortest == nullptr || e.length < shortest->length)) {
            shortest = &e;
          }
        }
        edges.push_back(*shortest);
      }
    }
  }

  std::uniform_int_distribution<int> random_demand(1, 100);
  double total = 0.0;
  for (Edge& e : edges) {
    e.demand = options.demand == DemandMode::kProportional
                   ? e.length
                   : static_cast<double>(random_demand(rng));
    total += e.demand;
  }

  double w = 0.0;
  switch (options.weight) {
    case WeightMode::kZero:
      w = 0.0;
      break;
    case WeightMode::kHalfQ:
      w = total / 2.0;
      break;
    case WeightMode::kFiveQ:
      w = 5.0 * total;
      break;
  }
  return Instance(n, std::move(edges), w);
}

DemandMode parse_demand_mode(const std::string& text) {
  if (text == "prop" || text == "proportional") return DemandMode::kProportional;
  if (text == "rand" || text == "random") return DemandMode::kRandom;
  throw Error("unknown demand mode '" + text + "' (expected prop or rand)");
}

WeightMode parse_weight_mode(const std::string& text) {
  if (text == "0" || text == "zero") return WeightMode::kZero;
  if (text == "halfQ") return WeightMode::kHalfQ;
  if (text == "fiveQ") return WeightMode::kFiveQ;
  throw Error("unknown curb weight mode '" + text + "' (expected 0, halfQ or fiveQ)");
}

std::string to_string(DemandMode mode) {
  return mode == DemandMode::kProportional ? "prop" : "rand";
}

std::string to_string(WeightMode mode) {
  switch (mode) {
    case WeightMode::kZero:
      return "0";
    case WeightMode::kHalfQ:
      return "halfQ";
    case WeightMode::kFiveQ:
      return "fiveQ";
  }
  return "?";
}

}  // namespace cpplc
