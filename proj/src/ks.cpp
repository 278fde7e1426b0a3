#include "qnash/ks.hpp"

#include <stdexcept>

#include "qnash/rng.hpp"

namespace qnash {

namespace {

LocateResult scan_line(QueryOracle& oracle, int fixed, bool fixed_is_row, double z, double eps) {
  if (!(z >= 0.0) || z > 1.0)
    throw std::invalid_argument("lemma_twoz_locate: z must be in [0,1]");
  const int k = oracle.k();
  if (fixed < 0 || fixed >= k) throw std::out_of_range("lemma_twoz_locate: index out of range");

  LocateResult out;
  double best_sum = 0.0;
  for (int i = 0; i < k; ++i) {
    std::optional<QueryAnswer> ans =
        fixed_is_row ? oracle.query(fixed, i) : oracle.query(i, fixed);
    if (!ans) {
      out.status = RunStatus::kBudgetExhausted;
      return out;
    }
    const double sum = ans->a + ans->b;
    if (out.index < 0 || sum > best_sum) {
      best_sum = sum;
      out.index = i;
      out.answer = *ans;
    }
  }
  out.pair_sum = best_sum;
  if (!(best_sum > 2.0 * z - eps)) out.status = RunStatus::kLocateFailed;
  return out;
}

}  // namespace

LocateResult lemma_twoz_locate(QueryOracle& oracle, int row, double z, double eps) {
  return scan_line(oracle, row, /*fixed_is_row=*/true, z, eps);
}

LocateResult lemma_twoz_locate_column(QueryOracle& oracle, int col, double z, double eps) {
  return scan_line(oracle, col, /*fixed_is_row=*/false, z, eps);
}

namespace {

// First (i, i') with i' in the support and v[i] > v[i'] + threshold, or
// (-1, -1) if the estimated payoffs are flat enough over the support.
std::pair<int, int> find_violation(const ApproxPayoffVector& v,
                                   const std::vector<double>& own, double threshold) {
  double support_min = 0.0;
  int support_argmin = -1;
  for (size_t i = 0; i < own.size(); ++i) {
    if (own[i] > 0.0 && (support_argmin < 0 || v.values[i] < support_min)) {
      support_min = v.values[i];
      support_argmin = static_cast<int>(i);
    }
  }
  int best = approx_best_response(v);
  if (support_argmin >= 0 && v.values[best] > support_min + threshold)
    return {best, support_argmin};
  return {-1, -1};
}

}  // namespace

KsOutcome ks_query_wsne(QueryOracle& oracle, double eps, uint64_t seed, KsMode mode,
                        const ZeroSumWsneOptions& options) {
  if (!(eps > 0.0) || eps >= 1.0)
    throw std::invalid_argument("ks_query_wsne: eps must be in (0,1)");
  if (oracle.range() != PayoffRange::unit())
    throw std::invalid_argument("ks_query_wsne: expects a [0,1] game oracle");
  const int k = oracle.k();
  const int64_t start_count = oracle.ledger().total_count();

  KsOutcome out;
  out.z = mode == KsMode::kGeneral ? 2.0 / 3.0 : 0.5;

  // Step 1: eps/10-WSNE of (D, -D), D = (R-C)/2.
  ZeroSumTransformOracle d_view(oracle, 0.5);
  ZeroSumWsneResult solved = zerosum_wsne(d_view, eps / 10.0, mix_seed(seed, 1), options);
  out.profile = solved.profile;
  if (solved.status != RunStatus::kOk) {
    out.status = solved.status;
    out.queries = oracle.ledger().total_count() - start_count;
    return out;
  }

  // Step 2: eps/10 payoff-vector estimates in the true game.
  EstimateResult row_est = estimate_payoff_vector(oracle, solved.profile.y, Player::kRow,
                                                  eps / 10.0, mix_seed(seed, 2));
  EstimateResult col_est = estimate_payoff_vector(oracle, solved.profile.x, Player::kColumn,
                                                  eps / 10.0, mix_seed(seed, 3));
  if (row_est.status != RunStatus::kOk || col_est.status != RunStatus::kOk) {
    out.status = RunStatus::kBudgetExhausted;
    out.queries = oracle.ledger().total_count() - start_count;
    return out;
  }

  // Step 3: support flatness checks at threshold t - eps/5, where t = 2/3 in
  // general mode and t = 1/2 + eps in zero-one mode.
  const double t = mode == KsMode::kGeneral ? 2.0 / 3.0 : 0.5 + eps;
  const double threshold = t - eps / 5.0;
  std::pair<int, int> row_violation = find_violation(row_est.vector, solved.profile.x, threshold);
  std::pair<int, int> col_violation = find_violation(col_est.vector, solved.profile.y, threshold);

  if (row_violation.first < 0 && col_violation.first < 0) {
    out.branch = KsBranch::kMixedFromZeroSum;
    out.queries = oracle.ledger().total_count() - start_count;
    return out;
  }

  // Step 4: a failed check certifies a high-gap row/column; scanning it
  // yields a cell where the payoff sum is large, hence a pure profile both
  // players are happy with.
  LocateResult located;
  std::pair<int, int> cell;
  if (row_violation.first >= 0) {
    located = lemma_twoz_locate(oracle, row_violation.first, out.z, eps);
    cell = {row_violation.first, located.index};
  } else {
    located = lemma_twoz_locate_column(oracle, col_violation.first, out.z, eps);
    cell = {located.index, col_violation.first};
  }
  if (located.status != RunStatus::kOk) {
    out.status = located.status;
    out.queries = oracle.ledger().total_count() - start_count;
    return out;
  }
  if (mode == KsMode::kZeroOne && !(located.answer.a == 1.0 && located.answer.b == 1.0)) {
    // In a zero-one game the located cell is a pure equilibrium only if both
    // payoffs are 1; anything else means the estimates were off.
    out.status = RunStatus::kLocateFailed;
    out.queries = oracle.ledger().total_count() - start_count;
    return out;
  }
  out.branch = KsBranch::kPureFromLemma;
  out.pure_cell = cell;
  out.profile = pure_profile(k, cell.first, cell.second);
  out.queries = oracle.ledger().total_count() - start_count;
  return out;
}

}  // namespace qnash
