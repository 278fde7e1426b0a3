#include "qnash/adversary.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qnash/regret.hpp"

namespace qnash {

RationalEps::RationalEps(int64_t num, int64_t den) : num(num), den(den) {
  if (den <= 0) throw std::invalid_argument("RationalEps: denominator must be positive");
  if (num < 0) throw std::invalid_argument("RationalEps: negative threshold");
  int64_t g = std::gcd(num, den);
  if (g > 1) {
    this->num /= g;
    this->den /= g;
  }
}

RationalEps RationalEps::from_double(double eps) {
  if (!(eps >= 0.0) || eps > 1.0)
    throw std::invalid_argument("RationalEps: eps must be in [0,1]");
  return RationalEps(std::llround(eps * 1e6), 1000000);
}

DetAdversaryOracle::DetAdversaryOracle(int k, RationalEps eps)
    : CountingOracle(k), eps_(eps) {
  if (!(eps.num > 0) || eps.value() >= 1.0)
    throw std::invalid_argument("DetAdversaryOracle: eps must be in (0,1)");
}

QueryAnswer DetAdversaryOracle::answer_query(int i, int j) {
  // Repeat queries return the recorded answer; the partial game is a
  // consistent function of the queried cells.
  if (auto prior = ledger_.answered(i, j)) return *prior;
  // Threshold rule on the column count from strictly before this query.
  if (eps_.count_below_threshold(ledger_.per_column_count(j), k())) return {0.0, 1.0};
  return {1.0, 0.0};
}

BimatrixGame det_adversary_complete(const PartialGame& state, const MixedProfile& claimed,
                                    RationalEps eps) {
  const int k = state.k;
  validate_profile(claimed, k);

  int hidden = -1;
  for (int j = 0; j < k; ++j) {
    if (claimed.y[j] < 2.0 / k && eps.count_below_threshold(state.per_column_count(j), k)) {
      hidden = j;
      break;
    }
  }
  if (hidden < 0) {
    throw std::invalid_argument(
        "det_adversary_complete: no column with claimed mass below 2/k and fewer than eps*k "
        "queries; the query budget must stay below eps*k^2/2 for a candidate to be guaranteed");
  }

  Matrix r = Matrix::square(k);
  Matrix c = Matrix::square(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (j == hidden) {
        r(i, j) = 0.0;
      } else if (auto ans = state.defined(i, j)) {
        r(i, j) = ans->a;
      } else {
        r(i, j) = 1.0;
      }
      c(i, j) = 1.0 - r(i, j);
    }
  }
  return BimatrixGame(std::move(r), std::move(c), PayoffRange::unit(), /*zero_one=*/true,
                      /*constant_sum=*/1.0);
}

bool completion_consistent(const QueryLedger& ledger, const BimatrixGame& game) {
  for (int i = 0; i < ledger.k(); ++i) {
    for (int j = 0; j < ledger.k(); ++j) {
      auto ans = ledger.answered(i, j);
      if (ans && (ans->a != game.r(i, j) || ans->b != game.c(i, j))) return false;
    }
  }
  return true;
}

HiddenColumnInstance gk_sample(int k, uint64_t seed) {
  if (k < 2) throw std::invalid_argument("gk_sample: k must be at least 2");
  Rng rng(seed);
  const int hidden = rng.next_index(k);
  std::vector<int> zero_rows(k);
  for (int j = 0; j < k; ++j) zero_rows[j] = rng.next_index(k);

  Matrix c = Matrix::square(k);
  Matrix r = Matrix::square(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double v;
      if (j == hidden) {
        v = 1.0;
      } else {
        v = (zero_rows[j] == i) ? 0.0 : 1.0;
      }
      c(i, j) = v;
      r(i, j) = 1.0 - v;
    }
  }
  BimatrixGame game(std::move(r), std::move(c), PayoffRange::unit(), /*zero_one=*/true,
                    /*constant_sum=*/1.0);
  return HiddenColumnInstance{k, hidden, std::move(zero_rows), std::move(game)};
}

HalfgameRefutation halfgame_refute(const HiddenColumnInstance& instance,
                                   const MixedProfile& profile) {
  validate_profile(profile, instance.k);
  HalfgameRefutation out;
  out.hidden_mass = profile.y[instance.hidden_column];
  out.max_regret = exact_regret(instance.game, profile).max_regret();
  out.regret_exceeds_bound = out.max_regret > 1.0 / (6.0 * instance.k);
  out.refuted = out.hidden_mass <= 0.5 && out.regret_exceeds_bound;
  return out;
}

std::optional<BimatrixGame> zero_adversary_refute(const QueryLedger& ledger,
                                                  const MixedProfile& profile, double eps) {
  if (!(eps >= 0.0) || eps >= 1.0)
    throw std::invalid_argument("zero_adversary_refute: eps must be in [0,1)");
  const int k = ledger.k();
  validate_profile(profile, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (auto ans = ledger.answered(i, j); ans && (ans->a != 0.0 || ans->b != 0.0))
        throw std::invalid_argument("zero_adversary_refute: ledger has nonzero answers");

  for (int row = 0; row < k; ++row) {
    if (profile.x[row] >= 1.0) continue;
    double unqueried_mass = 0.0;
    for (int j = 0; j < k; ++j)
      if (ledger.cell_count(row, j) == 0) unqueried_mass += profile.y[j];
    if (unqueried_mass > eps) {
      Matrix r = Matrix::square(k, 0.0);
      for (int j = 0; j < k; ++j)
        if (ledger.cell_count(row, j) == 0) r(row, j) = 1.0;
      Matrix c = Matrix::square(k, 0.0);
      return BimatrixGame(std::move(r), std::move(c), PayoffRange::unit(), /*zero_one=*/true);
    }
  }
  return std::nullopt;
}

}  // namespace qnash
