#pragma once

#include <string_view>

#include "cpplc/budget.hpp"
#include "cpplc/instance.hpp"
#include "cpplc/shortest_paths.hpp"
#include "cpplc/tour.hpp"

namespace cpplc {

/// A tour with its dp_cost already known.
struct ScoredTour {
  AbbreviatedTour tour;
  double cost = 0.0;
};

enum class Operator { kOneOpt, kTwoOpt, kTwoExchange };

std::string_view operator_name(Operator op);

// Best-improvement operators. Each candidate is priced with one DP evaluation
// charged to `budget`; scans run s outer, t inner, and only a strictly cheaper
// candidate replaces the incumbent, so the first-found best move wins ties.
// When the budget runs out mid-scan the best tour seen so far is returned.

/// Take the edge at position s out and reinsert it at position t, s != t.
ScoredTour one_opt(const Instance& instance, const ShortestPaths& paths,
                   const ScoredTour& start, Budget& budget);
/// Reverse positions s..t, s < t.
ScoredTour two_opt(const Instance& instance, const ShortestPaths& paths,
                   const ScoredTour& start, Budget& budget);
/// Swap positions s and t, s < t.
ScoredTour two_exchange(const Instance& instance, const ShortestPaths& paths,
                        const ScoredTour& start, Budget& budget);

ScoredTour apply_operator(Operator op, const Instance& instance, const ShortestPaths& paths,
                          const ScoredTour& start, Budget& budget);

// Convenience overloads that price `tour` first (charged to the budget).
AbbreviatedTour one_opt(const Instance& instance, const ShortestPaths& paths,
                        const AbbreviatedTour& tour, Budget& budget);
AbbreviatedTour two_opt(const Instance& instance, const ShortestPaths& paths,
                        const AbbreviatedTour& tour, Budget& budget);
AbbreviatedTour two_exchange(const Instance& instance, const ShortestPaths& paths,
                             const AbbreviatedTour& tour, Budget& budget);

/// Candidate tours of each neighborhood, in scan order. Exposed for tests and
/// tooling; the operators do not allocate through these.
AbbreviatedTour relocate(const AbbreviatedTour& tour, std::size_t from, std::size_t to);
AbbreviatedTour reverse_segment(const AbbreviatedTour& tour, std::size_t first, std::size_t last);
AbbreviatedTour swap_positions(const AbbreviatedTour& tour, std::size_t a, std::size_t b);

/// max(1, round(0.2 * m)).
int perturbation_strength(int edge_count);

/// `strength` random position swaps. The second position of each swap is
/// redrawn until it differs from the first; a one-edge tour is returned as is.
AbbreviatedTour perturb(AbbreviatedTour tour, int strength, Rng& rng);

}  // namespace cpplc
