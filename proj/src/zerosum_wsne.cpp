#include "qnash/zerosum_wsne.hpp"

#include <cmath>
#include <stdexcept>

#include "qnash/rng.hpp"

namespace qnash {

namespace {

// Moves all mass on indices where best beats the entry by more than eps/4
// onto the estimated best response. Returns false (precondition violation)
// if that mass exceeds eps/2 + 1e-9.
bool shift_far_mass(const ApproxPayoffVector& v, double eps, std::vector<double>& strategy,
                    double& mass_shifted) {
  const int best = approx_best_response(v);
  const double cutoff = v.values[best] - eps / 4.0;
  double mass = 0.0;
  for (size_t i = 0; i < strategy.size(); ++i) {
    if (v.values[i] < cutoff && strategy[i] > 0.0) mass += strategy[i];
  }
  mass_shifted = mass;
  if (mass > eps / 2.0 + 1e-9) return false;
  if (mass > 0.0) {
    for (size_t i = 0; i < strategy.size(); ++i) {
      if (v.values[i] < cutoff && strategy[i] > 0.0) strategy[i] = 0.0;
    }
    strategy[best] += mass;
    normalize(strategy);
  }
  return true;
}

}  // namespace

ConvertResult ne_to_wsne(const MixedProfile& profile, const ApproxPayoffVector& r,
                         const ApproxPayoffVector& c, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("ne_to_wsne: eps must be positive");
  const int k = profile.k();
  validate_profile(profile, k);
  if (r.k() != k || c.k() != k) throw std::invalid_argument("ne_to_wsne: dimension mismatch");
  const double stage = eps * eps / 24.0;
  if (r.accuracy > stage + 1e-12 || c.accuracy > stage + 1e-12)
    throw std::invalid_argument("ne_to_wsne: payoff vectors too coarse for the target eps");

  ConvertResult out;
  out.profile = profile;
  bool row_ok = shift_far_mass(r, eps, out.profile.x, out.row_mass_shifted);
  bool col_ok = shift_far_mass(c, eps, out.profile.y, out.col_mass_shifted);
  if (!row_ok || !col_ok) {
    out.status = RunStatus::kConversionRejected;
    out.profile = profile;
  }
  return out;
}

ZeroSumWsneResult zerosum_wsne(QueryOracle& oracle, double eps, uint64_t seed,
                               const ZeroSumWsneOptions& options) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("zerosum_wsne: eps must be in (0,1]");
  if (oracle.range() != PayoffRange::symmetric())
    throw std::invalid_argument("zerosum_wsne: oracle must serve payoffs in [-1,1]");
  const int k = oracle.k();
  const int64_t start_count = oracle.ledger().total_count();

  double stage = eps * eps / 24.0;
  double claimed = eps;
  if (options.stage_accuracy_floor && *options.stage_accuracy_floor > stage) {
    stage = *options.stage_accuracy_floor;
    claimed = std::sqrt(24.0 * stage);
  }

  ZeroSumWsneResult out;
  out.stage_accuracy = stage;
  out.claimed_eps = claimed;

  MwuConfig cfg = MwuConfig::for_epsilon(k, stage, mix_seed(seed, 1), options.c0);
  MwuResult solved = mwu_zero_sum(oracle, cfg);
  if (solved.status != RunStatus::kOk) {
    out.profile = solved.profile;
    out.status = solved.status;
    out.queries = oracle.ledger().total_count() - start_count;
    return out;
  }

  EstimateResult row_est =
      estimate_payoff_vector(oracle, solved.profile.y, Player::kRow, stage, mix_seed(seed, 2));
  EstimateResult col_est =
      estimate_payoff_vector(oracle, solved.profile.x, Player::kColumn, stage, mix_seed(seed, 3));
  if (row_est.status != RunStatus::kOk || col_est.status != RunStatus::kOk) {
    out.profile = solved.profile;
    out.status = RunStatus::kBudgetExhausted;
    out.queries = oracle.ledger().total_count() - start_count;
    return out;
  }

  ConvertResult converted = ne_to_wsne(solved.profile, row_est.vector, col_est.vector, claimed);
  out.profile = converted.profile;
  out.status = converted.status;
  out.queries = oracle.ledger().total_count() - start_count;
  return out;
}

}  // namespace qnash
