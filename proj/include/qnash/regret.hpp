#pragma once

#include "qnash/game.hpp"
#include "qnash/profile.hpp"

namespace qnash {

inline constexpr double kRegretTolerance = 1e-9;

// Exact deviation-incentive report for a profile, computed from the full
// matrices. Regret is the gap between the best-response payoff and the
// achieved payoff; the well-supported violation is the worst best-response
// gap over pure strategies actually in the support, so regret <= violation.
struct RegretReport {
  double row_regret = 0.0;
  double col_regret = 0.0;
  double row_best_response_payoff = 0.0;
  double col_best_response_payoff = 0.0;
  double row_wsne_violation = 0.0;
  double col_wsne_violation = 0.0;

  double max_regret() const { return row_regret > col_regret ? row_regret : col_regret; }
  double max_wsne_violation() const {
    return row_wsne_violation > col_wsne_violation ? row_wsne_violation : col_wsne_violation;
  }
};

// Expected payoffs of the profile (x.R.y and x.C.y).
double row_payoff(const BimatrixGame& game, const MixedProfile& profile);
double col_payoff(const BimatrixGame& game, const MixedProfile& profile);

RegretReport exact_regret(const BimatrixGame& game, const MixedProfile& profile);

// max(rowRegret, colRegret) <= eps, within kRegretTolerance.
bool is_eps_ne(const BimatrixGame& game, const MixedProfile& profile, double eps);

// Every pure strategy in either support is an eps-best response, within
// kRegretTolerance. Implies is_eps_ne at the same eps.
bool is_eps_wsne(const BimatrixGame& game, const MixedProfile& profile, double eps);

}  // namespace qnash
