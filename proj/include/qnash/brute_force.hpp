#pragma once

#include <optional>

#include "qnash/game.hpp"
#include "qnash/profile.hpp"

namespace qnash {

inline constexpr double kBruteForceTolerance = 1e-6;
inline constexpr int kBruteForceMaxK = 6;

struct BruteForceResult {
  MixedProfile profile;
  // Row-player value x.R.y; for a zero-sum game this is the game value.
  double value = 0.0;
  // Support sizes of the accepted solution, for diagnostics.
  int support_size = 0;
};

// Exact Nash equilibrium by support enumeration: for every pair of
// equal-size supports, solve the two indifference systems
//   sum_{j in Sy} R[i][j] y_j = v   (i in Sx),  sum y = 1
//   sum_{i in Sx} C[i][j] x_i = w   (j in Sy),  sum x = 1
// and accept the first nonnegative solution whose off-support strategies
// cannot improve. Supports whose system is numerically singular
// (condition number above 1e12) are skipped. Only intended for k <= 6;
// this routine sees full matrices and exists to verify the query
// algorithms, never to back them.
//
// Throws std::invalid_argument for k > kBruteForceMaxK and
// std::runtime_error if every support pair is degenerate.
BruteForceResult brute_force_equilibrium(const BimatrixGame& game);

}  // namespace qnash
