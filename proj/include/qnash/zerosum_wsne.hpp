#pragma once

#include <cstdint>
#include <optional>

#include "qnash/mwu.hpp"
#include "qnash/oracle.hpp"
#include "qnash/payoff_vector.hpp"
#include "qnash/profile.hpp"
#include "qnash/status.hpp"

namespace qnash {

// Result of converting an approximate equilibrium (with approximate payoff
// vectors) into a well-supported one.
struct ConvertResult {
  MixedProfile profile;
  RunStatus status = RunStatus::kOk;
  // Probability mass moved off the far-from-best rows/columns.
  double row_mass_shifted = 0.0;
  double col_mass_shifted = 0.0;
};

// Turns an (eps^2/24)-Nash equilibrium with (eps^2/24)-accurate payoff
// vectors into an eps-WSNE without making any payoff queries.
//
// With j* the best response according to r, the set
//   B  = { j : r[j*] > r[j] + eps/4 }
// contains every row that is not an eps/2-best response, and the profile can
// put at most eps/2 mass on it; that mass is shifted onto j* (a
// deterministic choice of the "anywhere outside B" the argument allows) and
// the vectors renormalized. Symmetrically for columns with c and B'.
//
// If either player has more than eps/2 + 1e-9 mass on its far set, the
// stated preconditions cannot hold and the call returns
// RunStatus::kConversionRejected instead of a bogus profile.
//
// Preconditions checked eagerly (std::invalid_argument): vector accuracies
// are at most eps^2/24, dimensions agree, profile is valid.
ConvertResult ne_to_wsne(const MixedProfile& profile, const ApproxPayoffVector& r,
                         const ApproxPayoffVector& c, double eps);

// Tuning for the composed zero-sum WSNE pipeline.
//
// stage_accuracy_floor clamps the internal stage accuracy eps^2/24 from
// below. The exact pipeline needs Theta(k log k / eps^4) queries with a
// large constant; at small eps that is far past any practical budget, while
// the conversion's output is still certified by its own mass check. When the
// floor binds, the conversion runs at the weakest eps consistent with the
// clamped stage accuracy, i.e. sqrt(24 * stage), and the result's
// `claimed_eps` reports it.
struct ZeroSumWsneOptions {
  double c0 = MwuConfig::kDefaultC0;
  std::optional<double> stage_accuracy_floor;
};

struct ZeroSumWsneResult {
  MixedProfile profile;
  RunStatus status = RunStatus::kOk;
  int64_t queries = 0;
  double claimed_eps = 0.0;    // eps actually guaranteed by the conversion
  double stage_accuracy = 0.0; // accuracy used for the solve and estimates
};

// eps-WSNE of a zero-sum game served through `oracle` (payoffs in [-1,1]):
// multiplicative-weights solve at accuracy eps^2/24, payoff-vector estimates
// for both players at the same accuracy, then the query-free conversion
// above. Total queries = 2*k*rounds + 2*k*sample_count; the result reports
// the exact count.
ZeroSumWsneResult zerosum_wsne(QueryOracle& oracle, double eps, uint64_t seed,
                               const ZeroSumWsneOptions& options = {});

}  // namespace qnash
