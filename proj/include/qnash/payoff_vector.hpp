#pragma once

#include <cstdint>
#include <vector>

#include "qnash/oracle.hpp"
#include "qnash/profile.hpp"
#include "qnash/status.hpp"

namespace qnash {

enum class Player { kRow, kColumn };

// Sampled estimate of one player's pure-strategy payoffs against a fixed
// opponent strategy. Entry i estimates R_i.y (row player) or (x.C)_i
// (column player); `accuracy` is the claimed per-entry error bound and
// `sample_count_per_entry` the number of queries averaged into each entry.
struct ApproxPayoffVector {
  std::vector<double> values;
  double accuracy = 0.0;
  Player player = Player::kRow;
  int64_t sample_count_per_entry = 0;

  int k() const { return static_cast<int>(values.size()); }
};

// Samples each entry of the payoff vector to within eps with per-entry
// failure probability at most 2/k^2 (whole vector 1 - 2/k): for each own
// pure strategy, draws sample_count(k, eps) opponent strategies i.i.d. from
// opponentStrategy and queries those cells, so the full estimate costs
// exactly k * sample_count(k, eps) queries.
struct EstimateResult {
  ApproxPayoffVector vector;
  RunStatus status = RunStatus::kOk;
  int64_t queries = 0;
};

// ceil(8 ln k / eps^2).
int64_t estimate_sample_count(int k, double eps);

EstimateResult estimate_payoff_vector(QueryOracle& oracle,
                                      const std::vector<double>& opponent_strategy,
                                      Player player, double eps, uint64_t seed);

// Exact payoff vector from a known game (accuracy 0). Verification-side
// counterpart of estimate_payoff_vector; makes no queries.
ApproxPayoffVector exact_payoff_vector(const BimatrixGame& game,
                                       const MixedProfile& profile, Player player);

// Best response according to the estimate: argmax entry, lowest index on
// ties.
int approx_best_response(const ApproxPayoffVector& v);

// Regret according to the estimate: v[argmax] - <own, v>. Within twice the
// vector's accuracy of the true regret when the accuracy claim holds.
double approx_regret(const ApproxPayoffVector& v, const std::vector<double>& own_strategy);

}  // namespace qnash
