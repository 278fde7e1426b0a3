#include "qnash/brute_force.hpp"

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "qnash/regret.hpp"

namespace qnash {

namespace {

constexpr double kConditionLimit = 1e12;
constexpr double kFeasibilityTol = 1e-9;

// All index subsets of {0..k-1} of the given size, in increasing bitmask
// order, so the search (and hence the returned equilibrium) is
// deterministic.
std::vector<std::vector<int>> subsets_of_size(int k, int size) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    std::vector<int> s;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

// Solves the indifference system for one player's support: the opponent
// mixes over `opp_support` so that every strategy in `own_support` earns the
// same value. Returns false if the system is near-singular or the solution
// has negative mass.
bool solve_indifference(const Matrix& payoffs, const std::vector<int>& own_support,
                        const std::vector<int>& opp_support, bool payoffs_are_rows,
                        std::vector<double>& opp_mix, double& value) {
  const int m = static_cast<int>(own_support.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m + 1, m + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      a(r, c) = payoffs_are_rows ? payoffs(own_support[r], opp_support[c])
                                 : payoffs(opp_support[c], own_support[r]);
    }
    a(r, m) = -1.0;
  }
  for (int c = 0; c < m; ++c) a(m, c) = 1.0;
  rhs(m) = 1.0;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > kConditionLimit) return false;
  Eigen::VectorXd sol = svd.solve(rhs);

  for (int c = 0; c < m; ++c)
    if (sol(c) < -kFeasibilityTol) return false;

  opp_mix.assign(payoffs.rows(), 0.0);
  double total = 0.0;
  for (int c = 0; c < m; ++c) {
    double p = sol(c) < 0.0 ? 0.0 : sol(c);
    opp_mix[opp_support[c]] = p;
    total += p;
  }
  if (!(total > 0.0)) return false;
  for (double& p : opp_mix) p /= total;
  value = sol(m);
  return true;
}

bool off_support_cannot_improve(const BimatrixGame& game, const MixedProfile& profile,
                                const std::vector<int>& row_support,
                                const std::vector<int>& col_support, double row_value,
                                double col_value) {
  const int k = game.k();
  std::vector<char> in_row(k, 0), in_col(k, 0);
  for (int i : row_support) in_row[i] = 1;
  for (int j : col_support) in_col[j] = 1;
  for (int i = 0; i < k; ++i) {
    if (in_row[i]) continue;
    double payoff = 0.0;
    for (int j = 0; j < k; ++j) payoff += game.r(i, j) * profile.y[j];
    if (payoff > row_value + kFeasibilityTol) return false;
  }
  for (int j = 0; j < k; ++j) {
    if (in_col[j]) continue;
    double payoff = 0.0;
    for (int i = 0; i < k; ++i) payoff += profile.x[i] * game.c(i, j);
    if (payoff > col_value + kFeasibilityTol) return false;
  }
  return true;
}

}  // namespace

BruteForceResult brute_force_equilibrium(const BimatrixGame& game) {
  const int k = game.k();
  if (k > kBruteForceMaxK)
    throw std::invalid_argument("brute_force_equilibrium: k above supported limit");

  for (int size = 1; size <= k; ++size) {
    auto supports = subsets_of_size(k, size);
    for (const auto& row_support : supports) {
      for (const auto& col_support : supports) {
        std::vector<double> y, x;
        double row_value = 0.0, col_value = 0.0;
        if (!solve_indifference(game.row_payoffs(), row_support, col_support,
                                /*payoffs_are_rows=*/true, y, row_value))
          continue;
        if (!solve_indifference(game.col_payoffs(), col_support, row_support,
                                /*payoffs_are_rows=*/false, x, col_value))
          continue;
        MixedProfile profile{x, y};
        if (!off_support_cannot_improve(game, profile, row_support, col_support, row_value,
                                        col_value))
          continue;
        // Final guard against accumulated solver error: accept only if the
        // exact verifier agrees well inside the advertised 1e-6.
        RegretReport report = exact_regret(game, profile);
        if (report.max_regret() > 1e-7 || report.max_wsne_violation() > 1e-7) continue;
        double value = row_payoff(game, profile);
        return BruteForceResult{std::move(profile), value, size};
      }
    }
  }
  throw std::runtime_error(
      "brute_force_equilibrium: every support pair was numerically degenerate");
}

}  // namespace qnash
