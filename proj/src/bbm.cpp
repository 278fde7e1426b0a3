#include "qnash/bbm.hpp"

#include <cmath>
#include <stdexcept>

#include "qnash/mwu.hpp"
#include "qnash/payoff_vector.hpp"
#include "qnash/rng.hpp"

namespace qnash {

double bbm_alpha() { return (3.0 - std::sqrt(5.0)) / 2.0; }

bool bbm_should_swap(double regret_by_r, double regret_by_c) {
  return regret_by_c > regret_by_r;
}

double bbm_delta(double g) { return (1.0 - g) / (2.0 - g); }

BbmOutcome bbm_query_ne(QueryOracle& oracle, double eps, uint64_t seed, double c0) {
  if (!(eps > 0.0) || eps >= 1.0)
    throw std::invalid_argument("bbm_query_ne: eps must be in (0,1)");
  if (oracle.range() != PayoffRange::unit())
    throw std::invalid_argument("bbm_query_ne: expects a [0,1] game oracle");
  const int k = oracle.k();
  const int64_t start_count = oracle.ledger().total_count();

  BbmOutcome out;
  out.alpha = bbm_alpha();

  // Step 1: eps/4 solution of the zero-sum game (R-C, C-R).
  ZeroSumTransformOracle d_view(oracle, 1.0);
  MwuConfig cfg = MwuConfig::for_epsilon(k, eps / 4.0, mix_seed(seed, 1), c0);
  MwuResult solved = mwu_zero_sum(d_view, cfg);
  out.profile = solved.profile;
  if (solved.status != RunStatus::kOk) {
    out.status = solved.status;
    out.queries = oracle.ledger().total_count() - start_count;
    return out;
  }

  // Step 2: eps/4 payoff-vector estimates in the true game.
  EstimateResult row_est = estimate_payoff_vector(oracle, solved.profile.y, Player::kRow,
                                                  eps / 4.0, mix_seed(seed, 2));
  EstimateResult col_est = estimate_payoff_vector(oracle, solved.profile.x, Player::kColumn,
                                                  eps / 4.0, mix_seed(seed, 3));
  if (row_est.status != RunStatus::kOk || col_est.status != RunStatus::kOk) {
    out.status = RunStatus::kBudgetExhausted;
    out.queries = oracle.ledger().total_count() - start_count;
    return out;
  }

  // Step 3: the player with the larger estimated regret leads.
  const double regret_by_r = approx_regret(row_est.vector, solved.profile.x);
  const double regret_by_c = approx_regret(col_est.vector, solved.profile.y);
  out.swapped = bbm_should_swap(regret_by_r, regret_by_c);
  const ApproxPayoffVector& leader_vector = out.swapped ? col_est.vector : row_est.vector;
  out.g = out.swapped ? regret_by_c : regret_by_r;
  out.b = approx_best_response(leader_vector);

  // Step 4: follower's exact best response to the leader's pure b, by
  // querying the leader's whole line (exactly k queries).
  double best_payoff = 0.0;
  int best_index = -1;
  for (int i = 0; i < k; ++i) {
    std::optional<QueryAnswer> ans = out.swapped ? oracle.query(i, out.b)
                                                 : oracle.query(out.b, i);
    if (!ans) {
      out.status = RunStatus::kBudgetExhausted;
      out.queries = oracle.ledger().total_count() - start_count;
      return out;
    }
    const double payoff = out.swapped ? ans->a : ans->b;
    if (best_index < 0 || payoff > best_payoff) {
      best_payoff = payoff;
      best_index = i;
    }
  }
  out.d = best_index;

  if (out.g <= out.alpha) {
    out.branch = BbmBranch::kLowRegret;
  } else {
    out.branch = BbmBranch::kShifted;
    out.delta = bbm_delta(out.g);
    if (!out.swapped) {
      out.profile.x = pure_distribution(k, out.b);
      for (int j = 0; j < k; ++j) out.profile.y[j] *= 1.0 - out.delta;
      out.profile.y[out.d] += out.delta;
    } else {
      out.profile.y = pure_distribution(k, out.b);
      for (int i = 0; i < k; ++i) out.profile.x[i] *= 1.0 - out.delta;
      out.profile.x[out.d] += out.delta;
    }
  }
  out.queries = oracle.ledger().total_count() - start_count;
  return out;
}

}  // namespace qnash
