#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qnash/game.hpp"
#include "qnash/oracle.hpp"
#include "qnash/profile.hpp"
#include "qnash/rng.hpp"

namespace qnash {

// Exact rational threshold eps = num/den. The hidden-column adversary's
// per-column rule compares integer query counts against eps * k; doing that
// in exact integer arithmetic keeps the combinatorial argument tie-proof.
// Doubles are converted with denominator 10^6.
struct RationalEps {
  int64_t num = 0;
  int64_t den = 1;

  static RationalEps from_double(double eps);
  RationalEps(int64_t num, int64_t den);
  RationalEps() = default;

  // count < eps * k, exactly.
  bool count_below_threshold(int64_t count, int k) const {
    return count * den < num * static_cast<int64_t>(k);
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// A game defined only on queried cells, as accumulated by an adversary's
// ledger.
struct PartialGame {
  int k = 0;
  const QueryLedger* ledger = nullptr;

  explicit PartialGame(const QueryLedger& l) : k(l.k()), ledger(&l) {}
  std::optional<QueryAnswer> defined(int i, int j) const { return ledger->answered(i, j); }
  int64_t per_column_count(int j) const { return ledger->per_column_count(j); }
};

// Deterministic hidden-column adversary: answers (0, 1) while the queried
// cell's column has received strictly fewer than eps*k queries, and (1, 0)
// afterwards. Cells answered once keep their answer on repeat queries, so
// any completion stays consistent with the full transcript.
class DetAdversaryOracle final : public CountingOracle {
 public:
  DetAdversaryOracle(int k, RationalEps eps);
  DetAdversaryOracle(int k, double eps) : DetAdversaryOracle(k, RationalEps::from_double(eps)) {}

  PayoffRange range() const override { return PayoffRange::unit(); }
  RationalEps eps() const { return eps_; }
  PartialGame partial_game() const { return PartialGame(ledger_); }

 protected:
  QueryAnswer answer_query(int i, int j) override;

 private:
  RationalEps eps_;
};

// Completes a partial game against a claimed profile: plants the hidden
// column at the lowest-index column with claimed mass below 2/k and fewer
// than eps*k queries (all-zero for the row player, all-one for the column
// player), fills every other unqueried cell with (1, 0), and keeps every
// recorded answer. The result is a zero-one constant-sum game in which the
// claimed profile is provably not a (1/2 - eps)-Nash equilibrium whenever
// k > 2/eps.
//
// Throws std::invalid_argument if no candidate column exists (which the
// caller rules out by budgeting queries strictly below eps*k^2/2).
BimatrixGame det_adversary_complete(const PartialGame& state, const MixedProfile& claimed,
                                    RationalEps eps);

// Cell-by-cell replay: true iff every recorded answer matches the game.
bool completion_consistent(const QueryLedger& ledger, const BimatrixGame& game);

// A draw from the hidden-column distribution over zero-one constant-sum
// games: column c pays the column player 1 against every row; every other
// column j hides its single zero at a uniformly random row r_j.
struct HiddenColumnInstance {
  int k = 0;
  int hidden_column = 0;
  std::vector<int> zero_rows;  // r_j per column; entry at the hidden column unused
  BimatrixGame game;
};

HiddenColumnInstance gk_sample(int k, uint64_t seed);

// Refutation check for a claimed profile on a hidden-column instance: the
// claim fails when the hidden column carries at most half the column
// player's mass, in which case the exact regret provably exceeds 1/(6k).
// Both facts are reported so tests can flag any discrepancy between them.
struct HalfgameRefutation {
  bool refuted = false;
  double hidden_mass = 0.0;
  double max_regret = 0.0;
  bool regret_exceeds_bound = false;  // max_regret > 1/(6k)
};
HalfgameRefutation halfgame_refute(const HiddenColumnInstance& instance,
                                   const MixedProfile& profile);

// All-zeros adversary: every query answers (0, 0).
class AllZerosOracle final : public CountingOracle {
 public:
  explicit AllZerosOracle(int k) : CountingOracle(k) {}
  PayoffRange range() const override { return PayoffRange::unit(); }

 protected:
  QueryAnswer answer_query(int, int) override { return {0.0, 0.0}; }
};

// Searches the all-zeros transcript for a witness against a claimed
// eps-WSNE: a row r with x_r < 1 whose unqueried columns carry more than eps
// of y's mass. If found, returns the explicit witness game (row-player
// payoff 1 on those cells, 0 elsewhere, column player all-zero) on which the
// claim fails; tests and logs are then self-certifying. Returns nullopt when
// no witness exists. Throws std::invalid_argument if the ledger contains a
// nonzero answer (wrong adversary).
std::optional<BimatrixGame> zero_adversary_refute(const QueryLedger& ledger,
                                                  const MixedProfile& profile, double eps);

}  // namespace qnash
