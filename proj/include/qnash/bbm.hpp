#pragma once

#include <cstdint>

#include "qnash/oracle.hpp"
#include "qnash/profile.hpp"
#include "qnash/status.hpp"

namespace qnash {

// Regret threshold at which the algorithm keeps the zero-sum solution:
// (3 - sqrt(5)) / 2, the value of a that minimizes max(a, (1-a)/(2-a)).
double bbm_alpha();

enum class BbmBranch { kLowRegret, kShifted };

struct BbmOutcome {
  MixedProfile profile;
  RunStatus status = RunStatus::kOk;
  BbmBranch branch = BbmBranch::kLowRegret;
  // Orientation: false means the row player had the larger estimated
  // regret and plays the leader role below; true means the roles were
  // swapped before steps 2-4.
  bool swapped = false;
  double g = 0.0;       // leader's regret according to its estimate
  int b = -1;           // leader's best response according to its estimate
  int d = -1;           // follower's exact best response to pure b
  double delta = 0.0;   // shift weight (1-g)/(2-g), shifted branch only
  double alpha = 0.0;
  int64_t queries = 0;
};

// Randomized query algorithm for an (alpha + eps)-Nash equilibrium of a
// general [0,1] game, alpha = (3 - sqrt(5))/2 ~ 0.382:
//   1. solve the zero-sum game (R-C, C-R) at accuracy eps/4;
//   2. estimate both players' payoff vectors in (R, C) at eps/4;
//   3. orient so the player with the larger estimated regret leads, with
//      leader regret g and estimated best response b;
//   4. find the follower's exact best response d to pure b by querying the
//      whole row/column (exactly k queries);
//   5. if g <= alpha keep the zero-sum profile, else the leader commits to
//      pure b and the follower mixes its zero-sum strategy with pure d at
//      weight delta = (1-g)/(2-g).
//
// Query count = zero-sum solve + two estimate blocks + exactly k. Budget
// exhaustion yields best-effort output with status kBudgetExhausted.
BbmOutcome bbm_query_ne(QueryOracle& oracle, double eps, uint64_t seed,
                        double c0 = 16.0);

// Orientation rule of step 3, factored out for testing: swap exactly when
// the column player's estimated regret exceeds the row player's.
bool bbm_should_swap(double regret_by_r, double regret_by_c);

// Shift weight of step 5.
double bbm_delta(double g);

}  // namespace qnash
