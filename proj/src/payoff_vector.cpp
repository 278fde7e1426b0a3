#include "qnash/payoff_vector.hpp"

#include <cmath>
#include <stdexcept>

#include "qnash/rng.hpp"

namespace qnash {

int64_t estimate_sample_count(int k, double eps) {
  if (k < 2) throw std::invalid_argument("estimate_sample_count: k must be at least 2");
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("estimate_sample_count: eps must be in (0,1]");
  return static_cast<int64_t>(std::ceil(8.0 * std::log(static_cast<double>(k)) / (eps * eps)));
}

EstimateResult estimate_payoff_vector(QueryOracle& oracle,
                                      const std::vector<double>& opponent_strategy,
                                      Player player, double eps, uint64_t seed) {
  const int k = oracle.k();
  validate_distribution(opponent_strategy, "estimate_payoff_vector: opponent strategy");
  if (opponent_strategy.size() != static_cast<size_t>(k))
    throw std::invalid_argument("estimate_payoff_vector: dimension mismatch");
  const int64_t samples = estimate_sample_count(k, eps);

  EstimateResult out;
  out.vector.values.assign(k, 0.0);
  out.vector.accuracy = eps;
  out.vector.player = player;
  out.vector.sample_count_per_entry = samples;

  Rng rng(seed);
  CdfSampler sampler(opponent_strategy);
  for (int own = 0; own < k; ++own) {
    double sum = 0.0;
    int64_t taken = 0;
    for (int64_t t = 0; t < samples; ++t) {
      int opp = sampler.draw(rng);
      std::optional<QueryAnswer> ans = player == Player::kRow ? oracle.query(own, opp)
                                                              : oracle.query(opp, own);
      if (!ans) {
        out.status = RunStatus::kBudgetExhausted;
        break;
      }
      sum += player == Player::kRow ? ans->a : ans->b;
      ++taken;
      ++out.queries;
    }
    out.vector.values[own] = taken > 0 ? sum / static_cast<double>(taken) : 0.0;
    if (out.status != RunStatus::kOk) break;
  }
  return out;
}

ApproxPayoffVector exact_payoff_vector(const BimatrixGame& game, const MixedProfile& profile,
                                       Player player) {
  validate_profile(profile, game.k());
  const int k = game.k();
  ApproxPayoffVector out;
  out.values.assign(k, 0.0);
  out.accuracy = 0.0;
  out.player = player;
  out.sample_count_per_entry = 0;
  for (int own = 0; own < k; ++own) {
    double acc = 0.0;
    if (player == Player::kRow) {
      for (int j = 0; j < k; ++j) acc += game.r(own, j) * profile.y[j];
    } else {
      for (int i = 0; i < k; ++i) acc += profile.x[i] * game.c(i, own);
    }
    out.values[own] = acc;
  }
  return out;
}

int approx_best_response(const ApproxPayoffVector& v) {
  if (v.values.empty()) throw std::invalid_argument("approx_best_response: empty vector");
  int best = 0;
  for (int i = 1; i < v.k(); ++i)
    if (v.values[i] > v.values[best]) best = i;
  return best;
}

double approx_regret(const ApproxPayoffVector& v, const std::vector<double>& own_strategy) {
  validate_distribution(own_strategy, "approx_regret: own strategy");
  if (own_strategy.size() != v.values.size())
    throw std::invalid_argument("approx_regret: dimension mismatch");
  double expected = 0.0;
  for (size_t i = 0; i < own_strategy.size(); ++i) expected += own_strategy[i] * v.values[i];
  return v.values[approx_best_response(v)] - expected;
}

}  // namespace qnash
