#include "qnash/game.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnash {

namespace {

void check_entries(const Matrix& m, PayoffRange range, bool zero_one, const char* name) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      double v = m(i, j);
      if (!std::isfinite(v) || !range.contains(v))
        throw std::invalid_argument(std::string("BimatrixGame: ") + name + " entry at (" +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    ") outside declared range");
      if (zero_one && v != 0.0 && v != 1.0)
        throw std::invalid_argument(std::string("BimatrixGame: ") + name +
                                    " entry not in {0,1} for zero-one game");
    }
  }
}

}  // namespace

BimatrixGame::BimatrixGame(Matrix row_payoffs, Matrix col_payoffs, PayoffRange range,
                           bool zero_one, std::optional<double> constant_sum)
    : k_(row_payoffs.rows()),
      r_(std::move(row_payoffs)),
      c_(std::move(col_payoffs)),
      range_(range),
      zero_one_(zero_one),
      constant_sum_(constant_sum) {
  if (k_ < 1) throw std::invalid_argument("BimatrixGame: k must be at least 1");
  if (r_.rows() != k_ || r_.cols() != k_ || c_.rows() != k_ || c_.cols() != k_)
    throw std::invalid_argument("BimatrixGame: matrices must be square and equally sized");
  if (!(range_.lo < range_.hi))
    throw std::invalid_argument("BimatrixGame: empty payoff range");
  check_entries(r_, range_, zero_one_, "R");
  check_entries(c_, range_, zero_one_, "C");
  if (constant_sum_) {
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j)
        if (std::abs(r_(i, j) + c_(i, j) - *constant_sum_) > 1e-9)
          throw std::invalid_argument("BimatrixGame: constant-sum flag violated");
  }
}

BimatrixGame derived_zero_sum(const BimatrixGame& game) {
  if (game.range() != PayoffRange::unit())
    throw std::invalid_argument("derived_zero_sum: expects a [0,1] game");
  const int k = game.k();
  Matrix d = Matrix::square(k);
  Matrix neg = Matrix::square(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double v = game.r(i, j) - game.c(i, j);
      d(i, j) = v;
      neg(i, j) = -v;
    }
  }
  return BimatrixGame(std::move(d), std::move(neg), PayoffRange::symmetric(),
                      /*zero_one=*/false, /*constant_sum=*/0.0);
}

DerivedDx derived_d_x(const BimatrixGame& game) {
  if (game.range() != PayoffRange::unit())
    throw std::invalid_argument("derived_d_x: expects a [0,1] game");
  const int k = game.k();
  DerivedDx out{Matrix::square(k), Matrix::square(k)};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      out.d(i, j) = 0.5 * (game.r(i, j) - game.c(i, j));
      out.x(i, j) = -0.5 * (game.r(i, j) + game.c(i, j));
    }
  }
  return out;
}

BimatrixGame zero_sum_game(Matrix d) {
  Matrix neg(d.rows(), d.cols());
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j) neg(i, j) = -d(i, j);
  return BimatrixGame(std::move(d), std::move(neg), PayoffRange::symmetric(),
                      /*zero_one=*/false, /*constant_sum=*/0.0);
}

}  // namespace qnash
