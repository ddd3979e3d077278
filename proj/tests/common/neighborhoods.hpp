#pragma once

#include "common/fixtures.hpp"
#include "cpplc/local_search.hpp"

namespace cpplc::testing {

// Neighborhoods spelled out directly from their definitions.
inline std::vector<AbbreviatedTour> neighbors(Operator op, const AbbreviatedTour& t) {
  std::vector<AbbreviatedTour> out;
  const std::size_t m = t.size();
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t u = 0; u < m; ++u) {
      if (s == u) continue;
      if (op != Operator::kOneOpt && u < s) continue;
      AbbreviatedTour c;
      if (op == Operator::kOneOpt) {
        AbbreviatedTour rest = t;
        const EdgeId moved = rest[s];
        rest.erase(rest.begin() + s);
        rest.insert(rest.begin() + u, moved);
        c = rest;
      } else if (op == Operator::kTwoOpt) {
        c = t;
        for (std::size_t i = 0; i <= u - s; ++i) c[s + i] = t[u - i];
      } else {
        c = t;
        c[s] = t[u];
        c[u] = t[s];
      }
      out.push_back(c);
    }
  }
  return out;
}

inline AbbreviatedTour brute_force_best(Operator op, const Instance& inst, const AbbreviatedTour& t) {
  const auto dist = dijkstra_all(inst);
  AbbreviatedTour best = t;
  double best_cost = brute_force_directions(inst, dist, t);
  for (const auto& c : neighbors(op, t)) {
    const double cost = brute_force_directions(inst, dist, c);
    if (cost < best_cost) {
      best_cost = cost;
      best = c;
    }
  }
  return best;
}

}  // namespace cpplc::testing
