#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

#include "common/fixtures.hpp"
#include "cpplc/oracle.hpp"
#include "cpplc/tour_eval.hpp"

namespace cpplc {
namespace {

using testing::four_node;

TEST(ExactTest, FourNode) {
  const Instance inst = four_node();
  const ShortestPaths sp = all_pairs_shortest_paths(inst);
  const SolveResult r = exact_optimum(inst, sp);
  EXPECT_DOUBLE_EQ(r.best_cost, 275);
  EXPECT_EQ(r.best_tour.order(), (AbbreviatedTour{1, 2, 3, 4}));
  EXPECT_GE(r.evals_used, 1);
  EXPECT_LE(r.evals_used, 24);
}

TEST(ExactTest, ThreeEdgesEqualsMinOverSixOrders) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = testing::random_instance(rng, {.min_edges = 3, .max_edges = 3});
    const ShortestPaths sp = all_pairs_shortest_paths(inst);
    AbbreviatedTour order{1, 2, 3};
    double best = std::numeric_limits<double>::infinity();
    AbbreviatedTour best_order;
    do {
      const double c = dp_cost(inst, sp, order);
      if (c < best) {
        best = c;
        best_order = order;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    const SolveResult r = exact_optimum(inst, sp);
    ASSERT_TRUE(testing::near(r.best_cost, best));
    ASSERT_EQ(r.best_tour.order(), best_order) << "lexicographically first optimum";
  }
}

TEST(ExactTest, MatchesIndependentBruteForce) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = testing::random_instance(rng, {.max_nodes = 6, .max_edges = 6});
    const ShortestPaths sp = all_pairs_shortest_paths(inst);
    ASSERT_TRUE(testing::near(exact_optimum(inst, sp).best_cost, testing::brute_force_optimum(inst)))
        << "trial " << trial;
  }
}

TEST(ExactTest, LimitEnforced) {
  std::mt19937_64 rng(53);
  const Instance inst = testing::random_instance(rng, {.min_edges = 10, .max_edges = 10});
  const ShortestPaths sp = all_pairs_shortest_paths(inst);
  EXPECT_THROW(exact_optimum(inst, sp), OracleLimitExceeded);
  EXPECT_THROW(exact_optimum(four_node(), all_pairs_shortest_paths(four_node()), 3),
               OracleLimitExceeded);
}

TEST(DirectionBruteforceTest, EqualsDp) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance(rng, {.max_nodes = 10, .max_edges = 12});
    const ShortestPaths sp = all_pairs_shortest_paths(inst);
    const AbbreviatedTour tour = testing::random_tour(inst.edge_count(), rng);
    ASSERT_TRUE(testing::near(direction_bruteforce(inst, sp, tour), dp_cost(inst, sp, tour)));
  }
}

TEST(DirectionBruteforceTest, LimitAndValidation) {
  const Instance inst = four_node();
  const ShortestPaths sp = all_pairs_shortest_paths(inst);
  EXPECT_THROW(direction_bruteforce(inst, sp, {1, 2, 3, 4}, 3), OracleLimitExceeded);
  EXPECT_THROW(direction_bruteforce(inst, sp, {1, 2, 2, 4}), InvalidTour);
  EXPECT_DOUBLE_EQ(direction_bruteforce(inst, sp, {1, 2, 4, 3}), 325);
}

}  // namespace
}  // namespace cpplc
