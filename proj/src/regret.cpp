#include "qnash/regret.hpp"

#include <vector>

namespace qnash {

namespace {

// R.y for the row player, x.C for the column player.
std::vector<double> row_payoff_vector(const BimatrixGame& game, const std::vector<double>& y) {
  const int k = game.k();
  std::vector<double> out(k, 0.0);
  for (int i = 0; i < k; ++i) {
    double acc = 0.0;
    for (int j = 0; j < k; ++j) acc += game.r(i, j) * y[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> col_payoff_vector(const BimatrixGame& game, const std::vector<double>& x) {
  const int k = game.k();
  std::vector<double> out(k, 0.0);
  for (int i = 0; i < k; ++i) {
    double acc = 0.0;
    for (int r = 0; r < k; ++r) acc += x[r] * game.c(r, i);
    out[i] = acc;
  }
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Best-response payoff and worst support gap for one player, given that
// player's pure-strategy payoffs and own mixed strategy.
struct SideReport {
  double best = 0.0;
  double regret = 0.0;
  double wsne_violation = 0.0;
};

SideReport side_report(const std::vector<double>& payoffs, const std::vector<double>& own) {
  SideReport out;
  double best = payoffs[0];
  for (double v : payoffs)
    if (v > best) best = v;
  out.best = best;
  out.regret = best - dot(payoffs, own);
  double worst_gap = 0.0;
  for (size_t i = 0; i < own.size(); ++i) {
    if (own[i] > 0.0) {
      double gap = best - payoffs[i];
      if (gap > worst_gap) worst_gap = gap;
    }
  }
  out.wsne_violation = worst_gap;
  return out;
}

}  // namespace

double row_payoff(const BimatrixGame& game, const MixedProfile& profile) {
  validate_profile(profile, game.k());
  return dot(row_payoff_vector(game, profile.y), profile.x);
}

double col_payoff(const BimatrixGame& game, const MixedProfile& profile) {
  validate_profile(profile, game.k());
  return dot(col_payoff_vector(game, profile.x), profile.y);
}

RegretReport exact_regret(const BimatrixGame& game, const MixedProfile& profile) {
  validate_profile(profile, game.k());
  SideReport row = side_report(row_payoff_vector(game, profile.y), profile.x);
  SideReport col = side_report(col_payoff_vector(game, profile.x), profile.y);
  RegretReport out;
  out.row_best_response_payoff = row.best;
  out.col_best_response_payoff = col.best;
  out.row_regret = row.regret;
  out.col_regret = col.regret;
  out.row_wsne_violation = row.wsne_violation;
  out.col_wsne_violation = col.wsne_violation;
  return out;
}

bool is_eps_ne(const BimatrixGame& game, const MixedProfile& profile, double eps) {
  return exact_regret(game, profile).max_regret() <= eps + kRegretTolerance;
}

bool is_eps_wsne(const BimatrixGame& game, const MixedProfile& profile, double eps) {
  return exact_regret(game, profile).max_wsne_violation() <= eps + kRegretTolerance;
}

}  // namespace qnash
