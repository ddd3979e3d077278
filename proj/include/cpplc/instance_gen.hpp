#pragma once

#include <cstdint>
#include <string>

#include "cpplc/instance.hpp"

namespace cpplc {

enum class DemandMode { kProportional, kRandom };
enum class WeightMode { kZero, kHalfQ, kFiveQ };

struct GeneratorOptions {
  int n = 10;
  double density = 0.4;  // target fraction of the n(n-1)/2 node pairs
  DemandMode demand = DemandMode::kRandom;
  WeightMode weight = WeightMode::kHalfQ;
  bool eulerian = false;
  std::uint64_t seed = 1;
};

/// Random benchmark instance. Nodes get uniform coordinates in the unit
/// square; a random spanning tree is topped up with distinct random pairs
/// until ceil(density * n(n-1)/2) edges exist. Lengths are
/// max(1, round(1000 * euclidean distance)). With `eulerian`, odd-degree nodes
/// are paired at random and each pair is evened out by duplicating the edges of
/// a shortest path between them. Demands equal lengths (proportional) or are
/// uniform integers in [1, 100]; W is 0, Q/2 or 5Q.
Instance generate(const GeneratorOptions& options);

DemandMode parse_demand_mode(const std::string& text);  // "prop" | "rand"
WeightMode parse_weight_mode(const std::string& text);  // "0" | "halfQ" | "fiveQ"
std::string to_string(DemandMode mode);
std::string to_string(WeightMode mode);

}  // namespace cpplc
