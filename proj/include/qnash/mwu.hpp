#pragma once

#include <cstdint>

#include "qnash/oracle.hpp"
#include "qnash/profile.hpp"
#include "qnash/status.hpp"

namespace qnash {

// Configuration for multiplicative-weights self-play on a zero-sum game.
//
// The default schedule, rounds = ceil(c0 * ln k / eps^2) with learning rate
// sqrt(ln k / rounds), makes each player's average regret at most
// 2*sqrt(ln k / rounds) = eps * 2/sqrt(c0) plus sampling deviation, so
// c0 = 16 leaves half the budget for the deviation. c0 is exposed because
// the right constant is an empirical matter.
struct MwuConfig {
  double epsilon = 0.1;       // target accuracy, in (0, 1]
  int64_t rounds = 1;         // >= 1
  double learning_rate = 0.1; // in (0, 1]
  uint64_t seed = 0;

  static constexpr double kDefaultC0 = 16.0;

  static int64_t rounds_for(int k, double eps, double c0 = kDefaultC0);
  static MwuConfig for_epsilon(int k, double eps, uint64_t seed, double c0 = kDefaultC0);

  void validate() const;
};

struct MwuResult {
  MixedProfile profile;        // time-averaged iterates of both players
  RunStatus status = RunStatus::kOk;
  int64_t rounds_completed = 0;
  int64_t queries = 0;
};

// Approximate Nash equilibrium of a zero-sum game served through `oracle`
// (payoffs in [-1,1], answers of the form (d, -d)).
//
// Each round both players sample one opponent pure strategy from the
// opponent's current mixed strategy, query its full column/row (k queries
// each, 2k per round), and apply an exponential-weights update to the
// sampled payoff vector. The output is the average of the iterates; on a
// successful run its exact regret in the zero-sum game is at most
// config.epsilon.
//
// Uses exactly 2 * k * config.rounds queries. If the oracle's budget runs
// out mid-round the average over completed rounds is returned (uniform if
// none completed) with status kBudgetExhausted.
MwuResult mwu_zero_sum(QueryOracle& oracle, const MwuConfig& config);

}  // namespace qnash
