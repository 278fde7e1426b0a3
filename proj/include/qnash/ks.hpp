#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "qnash/oracle.hpp"
#include "qnash/payoff_vector.hpp"
#include "qnash/profile.hpp"
#include "qnash/status.hpp"
#include "qnash/zerosum_wsne.hpp"

namespace qnash {

enum class KsMode { kGeneral, kZeroOne };
enum class KsBranch { kMixedFromZeroSum, kPureFromLemma };

struct KsOutcome {
  MixedProfile profile;
  RunStatus status = RunStatus::kOk;
  KsBranch branch = KsBranch::kMixedFromZeroSum;
  std::optional<std::pair<int, int>> pure_cell;
  double z = 0.0;        // threshold parameter: 2/3 general, 1/2 zero-one
  int64_t queries = 0;
};

// Scans row i with exactly k payoff queries and returns the lowest-index
// column maximizing R[i][j] + C[i][j]. When the caller has witnessed a
// support row i' and a row i with estimated payoff gap above z - eps/5, the
// returned cell is guaranteed to satisfy (R+C)[i][j] > 2z - eps; if no cell
// clears that bar the upstream estimate was bad and the result carries
// kLocateFailed (kBudgetExhausted if the scan could not finish).
struct LocateResult {
  int index = -1;       // located column (or row, when scanning a column)
  double pair_sum = 0.0;
  QueryAnswer answer;
  RunStatus status = RunStatus::kOk;
};
LocateResult lemma_twoz_locate(QueryOracle& oracle, int row, double z, double eps);
// Same scan down column j, for the role-swapped application.
LocateResult lemma_twoz_locate_column(QueryOracle& oracle, int col, double z, double eps);

// Zero-sum-reduction algorithm for well-supported equilibria of a [0,1]
// game: a (2/3 + eps)-WSNE in general mode, a (1/2 + eps)-WSNE in zero-one
// mode (where the pure branch is an exact pure equilibrium).
//
//   1. compute an eps/10-WSNE (x, y) of (D, -D), D = (R-C)/2, served as an
//      on-the-fly transform of the (R, C) oracle;
//   2. estimate r ~ R.y and c ~ x.C at accuracy eps/10;
//   3. check r[i] <= r[i'] + t - eps/5 for all i and all i' in supp(x), and
//      the symmetric condition on c over supp(y), with t = 2/3 in general
//      mode and t = 1/2 + eps in zero-one mode;
//   4. if both checks pass, (x, y) already is the promised WSNE; otherwise
//      the failing pair feeds the row/column scan above with z = 2/3
//      (general) or z = 1/2 (zero-one) and the located cell is returned as
//      a pure profile. In zero-one mode the located cell must have payoff 1
//      for both players (an exact pure equilibrium); anything else means the
//      estimates lied and the run fails with kLocateFailed.
//
// `options` tunes the internal zero-sum pipeline (see ZeroSumWsneOptions);
// the stage split eps/10 itself is fixed.
KsOutcome ks_query_wsne(QueryOracle& oracle, double eps, uint64_t seed, KsMode mode,
                        const ZeroSumWsneOptions& options = {});

}  // namespace qnash
