#pragma once

#include <optional>
#include <utility>

#include "qnash/matrix.hpp"

namespace qnash {

// Declared payoff interval. Kept as explicit metadata rather than inferred
// from entries: the zero-sum solvers assume [-1,1] while the general-game
// algorithms assume [0,1], and validation differs accordingly.
struct PayoffRange {
  double lo = 0.0;
  double hi = 1.0;

  static constexpr PayoffRange unit() { return {0.0, 1.0}; }
  static constexpr PayoffRange symmetric() { return {-1.0, 1.0}; }

  double width() const { return hi - lo; }
  bool contains(double v) const { return v >= lo && v <= hi; }
  bool operator==(const PayoffRange&) const = default;
};

// A k-by-k bimatrix game: R holds row-player payoffs, C column-player
// payoffs. Construction validates every entry against the declared range and
// the optional zero-one / constant-sum flags. Instances are immutable and
// safe to share across threads.
class BimatrixGame {
 public:
  BimatrixGame(Matrix row_payoffs, Matrix col_payoffs, PayoffRange range,
               bool zero_one = false, std::optional<double> constant_sum = std::nullopt);

  int k() const { return k_; }
  const Matrix& row_payoffs() const { return r_; }
  const Matrix& col_payoffs() const { return c_; }
  PayoffRange range() const { return range_; }
  bool zero_one() const { return zero_one_; }
  std::optional<double> constant_sum() const { return constant_sum_; }

  double r(int i, int j) const { return r_(i, j); }
  double c(int i, int j) const { return c_(i, j); }

 private:
  int k_ = 0;
  Matrix r_;
  Matrix c_;
  PayoffRange range_;
  bool zero_one_ = false;
  std::optional<double> constant_sum_;
};

// The zero-sum game (R-C, C-R) with payoffs in [-1,1], used by the
// regret-threshold algorithm for general games.
BimatrixGame derived_zero_sum(const BimatrixGame& game);

// The pair D = (R-C)/2 and X = -(R+C)/2 used by the zero-sum reduction for
// well-supported equilibria. Satisfies D = R + X entrywise.
struct DerivedDx {
  Matrix d;
  Matrix x;
};
DerivedDx derived_d_x(const BimatrixGame& game);

// The zero-sum game (D, -D) for a given D matrix (declared range [-1,1]).
BimatrixGame zero_sum_game(Matrix d);

}  // namespace qnash
