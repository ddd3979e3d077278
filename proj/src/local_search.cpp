#include "cpplc/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cpplc/tour_eval.hpp"

namespace cpplc {

std::string_view operator_name(Operator op) {
  switch (op) {
    case Operator::kOneOpt:
      return "1-opt";
    case Operator::kTwoOpt:
      return "2-opt";
    case Operator::kTwoExchange:
      return "2-exchange";
  }
  return "?";
}

AbbreviatedTour relocate(const AbbreviatedTour& tour, std::size_t from, std::size_t to) {
  AbbreviatedTour out = tour;
  if (from < to) {
    std::rotate(out.begin() + from, out.begin() + from + 1, out.begin() + to + 1);
  } else if (to < from) {
    std::rotate(out.begin() + to, out.begin() + from, out.begin() + from + 1);
  }
  return out;
}

AbbreviatedTour reverse_segment(const AbbreviatedTour& tour, std::size_t first, std::size_t last) {
  AbbreviatedTour out = tour;
  std::reverse(out.begin() + first, out.begin() + last + 1);
  return out;
}

AbbreviatedTour swap_positions(const AbbreviatedTour& tour, std::size_t a, std::size_t b) {
  AbbreviatedTour out = tour;
  std::swap(out[a], out[b]);
  return out;
}

namespace {

// Runs one best-improvement scan. `make(candidate, s, t)` rewrites the
// candidate buffer (a copy of the start tour) into the (s, t) neighbor and
// returns false for pairs outside the neighborhood; `undo` restores it.
template <typename Make, typename Undo>
ScoredTour scan(const Instance& instance, const ShortestPaths& paths, const ScoredTour& start,
                Budget& budget, bool ordered_pairs, Make make, Undo undo) {
  ScoredTour best = start;
  const std::size_t m = start.tour.size();
  AbbreviatedTour candidate = start.tour;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = ordered_pairs ? 0 : s + 1; t < m; ++t) {
      if (s == t) continue;
      if (!budget.consume()) return best;
      make(candidate, s, t);
      const double cost = detail::dp_cost_unchecked(instance, paths, candidate);
      if (cost < best.cost) {
        best.tour = candidate;
        best.cost = cost;
      }
      undo(candidate, s, t);
    }
  }
  return best;
}

}  // namespace

ScoredTour one_opt(const Instance& instance, const ShortestPaths& paths,
                   const ScoredTour& start, Budget& budget) {
  return scan(
      instance, paths, start, budget, true,
      [](AbbreviatedTour& c, std::size_t s, std::size_t t) {
        if (s < t) {
          std::rotate(c.begin() + s, c.begin() + s + 1, c.begin() + t + 1);
        } else {
          std::rotate(c.begin() + t, c.begin() + s, c.begin() + s + 1);
        }
      },
      [](AbbreviatedTour& c, std::size_t s, std::size_t t) {
        if (s < t) {
          std::rotate(c.begin() + s, c.begin() + t, c.begin() + t + 1);
        } else {
          std::rotate(c.begin() + t, c.begin() + t + 1, c.begin() + s + 1);
        }
      });
}

ScoredTour two_opt(const Instance& instance, const ShortestPaths& paths,
                   const ScoredTour& start, Budget& budget) {
  auto flip = [](AbbreviatedTour& c, std::size_t s, std::size_t t) {
    std::reverse(c.begin() + s, c.begin() + t + 1);
  };
  return scan(instance, paths, start, budget, false, flip, flip);
}

ScoredTour two_exchange(const Instance& instance, const ShortestPaths& paths,
                        const ScoredTour& start, Budget& budget) {
  auto swap = [](AbbreviatedTour& c, std::size_t s, std::size_t t) { std::swap(c[s], c[t]); };
  return scan(instance, paths, start, budget, false, swap, swap);
}

ScoredTour apply_operator(Operator op, const Instance& instance, const ShortestPaths& paths,
                          const ScoredTour& start, Budget& budget) {
  switch (op) {
    case Operator::kOneOpt:
      return one_opt(instance, paths, start, budget);
    case Operator::kTwoOpt:
      return two_opt(instance, paths, start, budget);
    case Operator::kTwoExchange:
      return two_exchange(instance, paths, start, budget);
  }
  return start;
}

namespace {

AbbreviatedTour priced_then(Operator op, const Instance& instance, const ShortestPaths& paths,
                            const AbbreviatedTour& tour, Budget& budget) {
  check_permutation(tour, instance.edge_count());
  if (!budget.consume()) return tour;
  const ScoredTour start{tour, detail::dp_cost_unchecked(instance, paths, tour)};
  return apply_operator(op, instance, paths, start, budget).tour;
}

}  // namespace

AbbreviatedTour one_opt(const Instance& instance, const ShortestPaths& paths,
                        const AbbreviatedTour& tour, Budget& budget) {
  return priced_then(Operator::kOneOpt, instance, paths, tour, budget);
}

AbbreviatedTour two_opt(const Instance& instance, const ShortestPaths& paths,
                        const AbbreviatedTour& tour, Budget& budget) {
  return priced_then(Operator::kTwoOpt, instance, paths, tour, budget);
}

AbbreviatedTour two_exchange(const Instance& instance, const ShortestPaths& paths,
                             const AbbreviatedTour& tour, Budget& budget) {
  return priced_then(Operator::kTwoExchange, instance, paths, tour, budget);
}

int perturbation_strength(int edge_count) {
  return std::max(1, static_cast<int>(std::lround(0.2 * edge_count)));
}

AbbreviatedTour perturb(AbbreviatedTour tour, int strength, Rng& rng) {
  const std::size_t m = tour.size();
  if (m < 2) return tour;
  std::uniform_int_distribution<std::size_t> pos(0, m - 1);
  for (int i = 0; i < strength; ++i) {
    const std::size_t a = pos(rng);
    std::size_t b = pos(rng);
    while (b == a) b = pos(rng);
    std::swap(tour[a], tour[b]);
  }
  return tour;
}

}  // namespace cpplc
