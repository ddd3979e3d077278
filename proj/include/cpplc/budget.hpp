#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace cpplc {

using Rng = std::mt19937_64;

/// Outer-iteration count plus an optional cap on DP evaluations, shared by
/// every operator a solver calls. Construction (the greedy seed) is not
/// charged; everything after it is.
class Budget {
 public:
  explicit Budget(int max_iters = 100, std::optional<std::int64_t> max_evals = std::nullopt)
      : max_iters_(max_iters), max_evals_(max_evals) {}

  int max_iters() const { return max_iters_; }
  std::optional<std::int64_t> max_evals() const { return max_evals_; }
  std::int64_t evals_used() const { return evals_used_; }

  bool exhausted() const { return max_evals_ && evals_used_ >= *max_evals_; }

  /// Charges one evaluation. Returns false, without charging, once the cap is
  /// reached.
  bool consume() {
    if (exhausted()) return false;
    ++evals_used_;
    return true;
  }

 private:
  int max_iters_;
  std::optional<std::int64_t> max_evals_;
  std::int64_t evals_used_ = 0;
};

}  // namespace cpplc
