#include <algorithm>
#include <random>

#include "gtest/gtest.h"

#include "common/fixtures.hpp"
#include "common/neighborhoods.hpp"
#include "cpplc/local_search.hpp"
#include "cpplc/tour_eval.hpp"

namespace cpplc {
namespace {

using testing::four_node;
using testing::random_instance;
using testing::random_tour;
using testing::brute_force_best;

constexpr Operator kOps[] = {Operator::kOneOpt, Operator::kTwoOpt, Operator::kTwoExchange};

AbbreviatedTour run(Operator op, const Instance& inst, const AbbreviatedTour& t, Budget& b) {
  const ShortestPaths sp = all_pairs_shortest_paths(inst);
  switch (op) {
    case Operator::kOneOpt:
      return one_opt(inst, sp, t, b);
    case Operator::kTwoOpt:
      return two_opt(inst, sp, t, b);
    case Operator::kTwoExchange:
      return two_exchange(inst, sp, t, b);
  }
  return t;
}

TEST(NeighborhoodTest, CandidateHelpers) {
  const AbbreviatedTour t{1, 2, 3, 4, 5};
  EXPECT_EQ(relocate(t, 0, 3), (AbbreviatedTour{2, 3, 4, 1, 5}));
  EXPECT_EQ(relocate(t, 4, 1), (AbbreviatedTour{1, 5, 2, 3, 4}));
  EXPECT_EQ(reverse_segment(t, 1, 3), (AbbreviatedTour{1, 4, 3, 2, 5}));
  EXPECT_EQ(swap_positions(t, 0, 4), (AbbreviatedTour{5, 2, 3, 4, 1}));
}

TEST(OperatorTest, SingleEdgeUnchanged) {
  const Instance inst = testing::single_edge();
  for (Operator op : kOps) {
    Budget budget;
    EXPECT_EQ(run(op, inst, {1}, budget), AbbreviatedTour{1});
  }
}

TEST(OperatorTest, FourNodeOneOptFromSimpleTour) {
  const Instance inst = four_node();
  const ShortestPaths sp = all_pairs_shortest_paths(inst);
  Budget budget;
  const AbbreviatedTour out = one_opt(inst, sp, AbbreviatedTour{1, 2, 4, 3}, budget);
  EXPECT_LE(dp_cost(inst, sp, out), 325);
  EXPECT_EQ(out, brute_force_best(Operator::kOneOpt, inst, {1, 2, 4, 3}));
  EXPECT_EQ(budget.evals_used(), 1 + 12);  // start + 4*3 relocations
}

TEST(OperatorTest, FourNodeTwoOptAndExchange) {
  const Instance inst = four_node();
  const ShortestPaths sp = all_pairs_shortest_paths(inst);
  const AbbreviatedTour start{4, 2, 1, 3};
  const double before = dp_cost(inst, sp, start);
  Budget budget;
  EXPECT_LE(dp_cost(inst, sp, two_opt(inst, sp, start, budget)), before);
  EXPECT_LE(dp_cost(inst, sp, two_exchange(inst, sp, start, budget)), before);
  EXPECT_EQ(two_opt(inst, sp, start, budget), brute_force_best(Operator::kTwoOpt, inst, start));
  EXPECT_EQ(two_exchange(inst, sp, start, budget),
            brute_force_best(Operator::kTwoExchange, inst, start));
}

TEST(OperatorTest, TwoEdgesTwoOptPicksCheaperOrder) {
  const Instance inst = four_node();
  const Instance two(3, {inst.edge(1), inst.edge(2)}, 0);
  const ShortestPaths sp = all_pairs_shortest_paths(two);
  Budget budget;
  const AbbreviatedTour out = two_opt(two, sp, AbbreviatedTour{2, 1}, budget);
  const double ab = dp_cost(two, sp, AbbreviatedTour{1, 2});
  const double ba = dp_cost(two, sp, AbbreviatedTour{2, 1});
  EXPECT_EQ(dp_cost(two, sp, out), std::min(ab, ba));
}

TEST(OperatorTest, LocalOptimumIsFixedPoint) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = random_instance(rng, {.max_edges = 8});
    for (Operator op : kOps) {
      Budget budget;
      AbbreviatedTour t = random_tour(inst.edge_count(), rng);
      for (AbbreviatedTour next = run(op, inst, t, budget); next != t; next = run(op, inst, t, budget)) {
        t = next;
      }
      EXPECT_EQ(run(op, inst, t, budget), t);
    }
  }
}

TEST(OperatorTest, MatchesBruteForceNeighborhood) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = random_instance(rng, {.max_nodes = 7, .max_edges = 6});
    const AbbreviatedTour start = random_tour(inst.edge_count(), rng);
    for (Operator op : kOps) {
      Budget budget;
      const AbbreviatedTour out = run(op, inst, start, budget);
      ASSERT_TRUE(is_permutation_of_edges(out, inst.edge_count()));
      ASSERT_EQ(out, brute_force_best(op, inst, start))
          << operator_name(op) << " trial " << trial;
    }
  }
}

TEST(OperatorTest, NeverWorsens) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = random_instance(rng, {.max_nodes = 15, .max_edges = 25});
    const ShortestPaths sp = all_pairs_shortest_paths(inst);
    const AbbreviatedTour start = random_tour(inst.edge_count(), rng);
    const double before = dp_cost(inst, sp, start);
    for (Operator op : kOps) {
      Budget budget;
      ASSERT_LE(dp_cost(inst, sp, run(op, inst, start, budget)), before);
    }
  }
}

TEST(OperatorTest, BudgetStopsScanEarly) {
  std::mt19937_64 rng(79);
  const Instance inst = random_instance(rng, {.min_edges = 10, .max_edges = 10});
  const ShortestPaths sp = all_pairs_shortest_paths(inst);
  const AbbreviatedTour start = random_tour(10, rng);
  for (Operator op : kOps) {
    Budget budget(100, 7);
    const AbbreviatedTour out = run(op, inst, start, budget);
    EXPECT_EQ(budget.evals_used(), 7);
    EXPECT_TRUE(budget.exhausted());
    EXPECT_LE(dp_cost(inst, sp, out), dp_cost(inst, sp, start));
    // Nothing left: the operator hands back its input untouched.
    EXPECT_EQ(run(op, inst, start, budget), start);
    EXPECT_EQ(budget.evals_used(), 7);
  }
}

TEST(PerturbTest, Strength) {
  EXPECT_EQ(perturbation_strength(1), 1);
  EXPECT_EQ(perturbation_strength(4), 1);
  EXPECT_EQ(perturbation_strength(10), 2);
  EXPECT_EQ(perturbation_strength(18), 4);  // round(3.6)
  EXPECT_EQ(perturbation_strength(32), 6);  // round(6.4)
}

TEST(PerturbTest, DeterministicPermutation) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng a(seed);
    Rng b(seed);
    const AbbreviatedTour base = identity_tour(12);
    const AbbreviatedTour x = perturb(base, 3, a);
    EXPECT_EQ(x, perturb(base, 3, b));
    EXPECT_TRUE(is_permutation_of_edges(x, 12));
  }
}

TEST(PerturbTest, SingleSwapMovesExactlyTwoPositions) {
  Rng rng(5);
  const AbbreviatedTour base = identity_tour(4);
  for (int i = 0; i < 50; ++i) {
    const AbbreviatedTour x = perturb(base, 1, rng);
    int moved = 0;
    for (std::size_t k = 0; k < 4; ++k) moved += x[k] != base[k];
    EXPECT_EQ(moved, 2);
  }
}

TEST(PerturbTest, SwapIsAnInvolution) {
  const AbbreviatedTour t{3, 1, 4, 2};
  EXPECT_EQ(swap_positions(swap_positions(t, 1, 3), 1, 3), t);
}

}  // namespace
}  // namespace cpplc
