#include "qnash/mwu.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qnash/rng.hpp"

namespace qnash {

int64_t MwuConfig::rounds_for(int k, double eps, double c0) {
  if (k < 2) throw std::invalid_argument("MwuConfig: k must be at least 2");
  if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("MwuConfig: eps must be in (0,1]");
  if (!(c0 > 0.0)) throw std::invalid_argument("MwuConfig: c0 must be positive");
  return static_cast<int64_t>(std::ceil(c0 * std::log(static_cast<double>(k)) / (eps * eps)));
}

MwuConfig MwuConfig::for_epsilon(int k, double eps, uint64_t seed, double c0) {
  MwuConfig cfg;
  cfg.epsilon = eps;
  cfg.rounds = rounds_for(k, eps, c0);
  cfg.learning_rate = std::sqrt(std::log(static_cast<double>(k)) / static_cast<double>(cfg.rounds));
  cfg.seed = seed;
  return cfg;
}

void MwuConfig::validate() const {
  if (!(epsilon > 0.0) || epsilon > 1.0)
    throw std::invalid_argument("MwuConfig: epsilon must be in (0,1]");
  if (rounds < 1) throw std::invalid_argument("MwuConfig: rounds must be at least 1");
  if (!(learning_rate > 0.0) || learning_rate > 1.0)
    throw std::invalid_argument("MwuConfig: learning rate must be in (0,1]");
}

MwuResult mwu_zero_sum(QueryOracle& oracle, const MwuConfig& config) {
  config.validate();
  const int k = oracle.k();
  if (k < 2) throw std::invalid_argument("mwu_zero_sum: k must be at least 2");
  if (oracle.range() != PayoffRange::symmetric())
    throw std::invalid_argument("mwu_zero_sum: oracle must serve payoffs in [-1,1]");

  const double eta = config.learning_rate;
  Rng rng(config.seed);

  // Normalized weights double as the current mixed strategies.
  std::vector<double> wx(k, 1.0 / k), wy(k, 1.0 / k);
  std::vector<double> avg_x(k, 0.0), avg_y(k, 0.0);
  std::vector<double> row_gain(k, 0.0), col_gain(k, 0.0);

  MwuResult out;
  const int64_t start_count = oracle.ledger().total_count();

  for (int64_t round = 0; round < config.rounds; ++round) {
    // Both samples are drawn against the strategies entering this round.
    const int opp_col = rng.sample_weights(wy);
    const int opp_row = rng.sample_weights(wx);

    bool exhausted = false;
    for (int i = 0; i < k && !exhausted; ++i) {
      std::optional<QueryAnswer> ans = oracle.query(i, opp_col);
      if (!ans) {
        exhausted = true;
        break;
      }
      row_gain[i] = ans->a;  // D[i][opp_col]
    }
    for (int j = 0; j < k && !exhausted; ++j) {
      std::optional<QueryAnswer> ans = oracle.query(opp_row, j);
      if (!ans) {
        exhausted = true;
        break;
      }
      col_gain[j] = ans->b;  // -D[opp_row][j]
    }
    if (exhausted) {
      out.status = RunStatus::kBudgetExhausted;
      break;
    }

    for (int i = 0; i < k; ++i) avg_x[i] += wx[i];
    for (int j = 0; j < k; ++j) avg_y[j] += wy[j];

    double sum_x = 0.0, sum_y = 0.0;
    for (int i = 0; i < k; ++i) {
      wx[i] *= std::exp(eta * row_gain[i]);
      sum_x += wx[i];
    }
    for (int j = 0; j < k; ++j) {
      wy[j] *= std::exp(eta * col_gain[j]);
      sum_y += wy[j];
    }
    for (int i = 0; i < k; ++i) wx[i] /= sum_x;
    for (int j = 0; j < k; ++j) wy[j] /= sum_y;

    ++out.rounds_completed;
  }

  out.queries = oracle.ledger().total_count() - start_count;
  if (out.rounds_completed == 0) {
    out.profile = uniform_profile(k);
  } else {
    const double inv = 1.0 / static_cast<double>(out.rounds_completed);
    out.profile.x.resize(k);
    out.profile.y.resize(k);
    for (int i = 0; i < k; ++i) out.profile.x[i] = avg_x[i] * inv;
    for (int j = 0; j < k; ++j) out.profile.y[j] = avg_y[j] * inv;
    normalize(out.profile.x);
    normalize(out.profile.y);
  }
  return out;
}

}  // namespace qnash
