#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qnash/bbm.hpp"
#include "qnash/harness.hpp"
#include "qnash/ks.hpp"
#include "qnash/mwu.hpp"
#include "qnash/payoff_vector.hpp"
#include "qnash/regret.hpp"
#include "qnash/rng.hpp"
#include "test_util.hpp"

using namespace qnash;
using namespace qnash::testutil;
using Catch::Approx;

namespace {

// The exact inner pipeline needs ~1/eps^4 queries with a huge constant;
// everything here that is not specifically about the exact composition runs
// with a floored stage accuracy (the certifying checks are unaffected).
ZeroSumWsneOptions floored() {
  ZeroSumWsneOptions options;
  options.stage_accuracy_floor = 0.05;
  return options;
}

}  // namespace

TEST_CASE("alpha is the threshold constant") {
  CHECK(std::abs(bbm_alpha() - 0.38196601125010515) <= 1e-12);
}

TEST_CASE("shift weight formula and monotonicity") {
  CHECK(bbm_delta(0.5) == Approx(1.0 / 3.0).margin(1e-15));
  CHECK(bbm_delta(0.0) == Approx(0.5));
  CHECK(bbm_delta(1.0) == 0.0);
  for (int i = 0; i + 1 <= 100; ++i) {
    double g0 = i / 100.0, g1 = (i + 1) / 100.0;
    CHECK(bbm_delta(g0) >= bbm_delta(g1));
  }
}

TEST_CASE("role swap triggers on strictly larger column regret and is an involution") {
  CHECK_FALSE(bbm_should_swap(0.3, 0.2));
  CHECK(bbm_should_swap(0.2, 0.3));
  CHECK_FALSE(bbm_should_swap(0.25, 0.25));  // ties keep the row player leading
  // Applying the swap transform twice restores the original orientation.
  struct Oriented {
    double lead_regret, follow_regret;
    bool swapped;
  };
  auto apply = [](Oriented o) {
    return Oriented{o.follow_regret, o.lead_regret, !o.swapped};
  };
  Oriented original{0.2, 0.7, false};
  Oriented twice = apply(apply(original));
  CHECK(twice.lead_regret == original.lead_regret);
  CHECK(twice.follow_regret == original.follow_regret);
  CHECK(twice.swapped == original.swapped);
}

TEST_CASE("constant game lands in the low-regret branch with zero regret") {
  Matrix ones = Matrix::square(6, 1.0);
  BimatrixGame game(ones, ones, PayoffRange::unit());
  MatrixOracle oracle(game);
  BbmOutcome out = bbm_query_ne(oracle, 0.2, 3);
  REQUIRE(out.status == RunStatus::kOk);
  CHECK(out.branch == BbmBranch::kLowRegret);
  CHECK(out.g <= out.alpha);
  CHECK(exact_regret(game, out.profile).max_regret() == Approx(0.0).margin(1e-9));
}

TEST_CASE("query accounting: solve plus two estimates plus exactly k") {
  const int k = 10;
  const double eps = 0.5;
  BimatrixGame game = generate_game(GeneratorKind::kUniform, k, 64);
  MatrixOracle oracle(game);
  BbmOutcome out = bbm_query_ne(oracle, eps, 12);
  REQUIRE(out.status == RunStatus::kOk);
  const int64_t rounds = MwuConfig::rounds_for(k, eps / 4.0);
  const int64_t samples = estimate_sample_count(k, eps / 4.0);
  CHECK(out.queries == 2 * k * rounds + 2 * k * samples + k);
  CHECK(out.queries == oracle.ledger().total_count());
}

TEST_CASE("identical payoff matrices force the shifted branch for the row player") {
  // The difference game is identically zero, so the solver stays uniform
  // while row 0 pays 1 and the others pay 0, pushing g to 1 - 1/k > alpha.
  const int k = 8;
  BimatrixGame game = dominant_row_coordination(k, 0);
  MatrixOracle oracle(game);
  BbmOutcome out = bbm_query_ne(oracle, 0.1, 5);
  REQUIRE(out.status == RunStatus::kOk);
  CHECK(out.branch == BbmBranch::kShifted);
  CHECK_FALSE(out.swapped);
  CHECK(out.b == 0);
  CHECK(out.d == 0);
  CHECK(out.g == Approx(1.0 - 1.0 / k).margin(1e-9));
  CHECK(out.delta == Approx(bbm_delta(out.g)).margin(1e-12));
  // Leader commits to pure b; follower mixes its old strategy with pure d.
  CHECK(out.profile.x == pure_distribution(k, 0));
  CHECK(out.profile.y[0] == Approx((1.0 - out.delta) / k + out.delta).margin(1e-9));
  for (int j = 1; j < k; ++j)
    CHECK(out.profile.y[j] == Approx((1.0 - out.delta) / k).margin(1e-9));
  // And here the shifted profile is in fact an exact equilibrium.
  CHECK(exact_regret(game, out.profile).max_regret() == Approx(0.0).margin(1e-9));
}

TEST_CASE("the mirror game swaps the roles") {
  const int k = 8;
  // Column 0 of both matrices is all ones: now the column player is the one
  // with the large estimated regret.
  Matrix r = Matrix::square(k, 0.0);
  for (int i = 0; i < k; ++i) r(i, 0) = 1.0;
  Matrix c = r;
  BimatrixGame game(std::move(r), std::move(c), PayoffRange::unit());
  MatrixOracle oracle(game);
  BbmOutcome out = bbm_query_ne(oracle, 0.1, 5);
  REQUIRE(out.status == RunStatus::kOk);
  CHECK(out.branch == BbmBranch::kShifted);
  CHECK(out.swapped);
  CHECK(out.b == 0);
  CHECK(out.profile.y == pure_distribution(k, 0));
  CHECK(exact_regret(game, out.profile).max_regret() == Approx(0.0).margin(1e-9));
}

TEST_CASE("branch flag matches the regret threshold on random games") {
  Rng rng(2718);
  int successes = 0;
  for (uint64_t trial = 0; trial < 10; ++trial) {
    BimatrixGame game = generate_game(GeneratorKind::kUniform, 30, rng.next_u64());
    MatrixOracle oracle(game);
    BbmOutcome out = bbm_query_ne(oracle, 0.2, rng.next_u64());
    REQUIRE(out.status == RunStatus::kOk);
    CHECK((out.branch == BbmBranch::kLowRegret) == (out.g <= out.alpha));
    if (out.branch == BbmBranch::kShifted)
      CHECK(out.delta == Approx(bbm_delta(out.g)).margin(1e-12));
    if (exact_regret(game, out.profile).max_regret() <= out.alpha + 0.2 + 1e-9) ++successes;
  }
  CHECK(successes >= 8);
}

TEST_CASE("budget exhaustion mid-solve still yields a valid claimed profile") {
  BimatrixGame game = generate_game(GeneratorKind::kUniform, 10, 444);
  MatrixOracle inner(game);
  BudgetedOracle oracle(inner, 50);
  BbmOutcome out = bbm_query_ne(oracle, 0.2, 9);
  CHECK(out.status == RunStatus::kBudgetExhausted);
  validate_profile(out.profile, 10);
}

TEST_CASE("row scan returns the best pair sum above the bar") {
  BimatrixGame game =
      make_game(3, {0.05, 0.75, 0.45, 0, 0, 0, 0, 0, 0}, {0.05, 0.75, 0.45, 0, 0, 0, 0, 0, 0});
  // Pair sums along row 0: 0.1, 1.5, 0.9.
  MatrixOracle oracle(game);
  LocateResult res = lemma_twoz_locate(oracle, 0, 2.0 / 3.0, 0.1);
  REQUIRE(res.status == RunStatus::kOk);
  CHECK(res.index == 1);
  CHECK(res.pair_sum == Approx(1.5));
  CHECK(oracle.ledger().total_count() == 3);

  // Row 1 is all zeros: nothing clears 2z - eps.
  LocateResult fail = lemma_twoz_locate(oracle, 1, 2.0 / 3.0, 0.1);
  CHECK(fail.status == RunStatus::kLocateFailed);
  CHECK(oracle.ledger().total_count() == 6);
}

TEST_CASE("row scan on a zero-one game finds the double-one cell") {
  BimatrixGame game = identity_coordination(4);
  MatrixOracle oracle(game);
  LocateResult res = lemma_twoz_locate(oracle, 2, 0.5, 0.1);
  REQUIRE(res.status == RunStatus::kOk);
  CHECK(res.index == 2);
  CHECK(res.answer.a == 1.0);
  CHECK(res.answer.b == 1.0);
}

TEST_CASE("column scan mirrors the row scan") {
  BimatrixGame game = make_game(2, {0.1, 0, 0.9, 0}, {0.2, 0, 0.9, 0});
  MatrixOracle oracle(game);
  LocateResult res = lemma_twoz_locate_column(oracle, 0, 2.0 / 3.0, 0.4);
  REQUIRE(res.status == RunStatus::kOk);
  CHECK(res.index == 1);
  CHECK(res.pair_sum == Approx(1.8));
  CHECK(oracle.ledger().total_count() == 2);
}

TEST_CASE("flat games keep the zero-sum mixed profile") {
  Matrix half = Matrix::square(5, 0.5);
  BimatrixGame game(half, half, PayoffRange::unit());
  MatrixOracle oracle(game);
  KsOutcome out = ks_query_wsne(oracle, 0.3, 7, KsMode::kGeneral, floored());
  REQUIRE(out.status == RunStatus::kOk);
  CHECK(out.branch == KsBranch::kMixedFromZeroSum);
  CHECK(exact_regret(game, out.profile).max_wsne_violation() == Approx(0.0).margin(1e-9));
}

TEST_CASE("dominant-row coordination reaches the pure branch with an exact equilibrium") {
  const int k = 8;
  BimatrixGame game = dominant_row_coordination(k, 0);
  for (KsMode mode : {KsMode::kGeneral, KsMode::kZeroOne}) {
    MatrixOracle oracle(game);
    KsOutcome out = ks_query_wsne(oracle, 0.2, 11, mode, floored());
    REQUIRE(out.status == RunStatus::kOk);
    REQUIRE(out.branch == KsBranch::kPureFromLemma);
    REQUIRE(out.pure_cell.has_value());
    CHECK(out.pure_cell->first == 0);
    CHECK(game.r(out.pure_cell->first, out.pure_cell->second) == 1.0);
    CHECK(game.c(out.pure_cell->first, out.pure_cell->second) == 1.0);
    CHECK(exact_regret(game, out.profile).max_wsne_violation() == Approx(0.0).margin(1e-12));
    CHECK(out.z == (mode == KsMode::kGeneral ? Approx(2.0 / 3.0) : Approx(0.5)));
  }
}

TEST_CASE("identity coordination stays mixed and well supported") {
  BimatrixGame game = identity_coordination(6);
  MatrixOracle oracle(game);
  KsOutcome out = ks_query_wsne(oracle, 0.2, 13, KsMode::kZeroOne, floored());
  REQUIRE(out.status == RunStatus::kOk);
  CHECK(out.branch == KsBranch::kMixedFromZeroSum);
  CHECK(is_eps_wsne(game, out.profile, 0.5 + 0.2));
}

TEST_CASE("pure branch costs exactly k extra queries") {
  const int k = 8;
  const double eps = 0.2;
  BimatrixGame game = dominant_row_coordination(k, 3);
  MatrixOracle oracle(game);
  KsOutcome out = ks_query_wsne(oracle, eps, 17, KsMode::kGeneral, floored());
  REQUIRE(out.branch == KsBranch::kPureFromLemma);
  const double stage = std::max((eps / 10.0) * (eps / 10.0) / 24.0, 0.05);
  const int64_t rounds = MwuConfig::rounds_for(k, stage);
  const int64_t inner_samples = estimate_sample_count(k, stage);
  const int64_t outer_samples = estimate_sample_count(k, eps / 10.0);
  CHECK(out.queries == 2 * k * rounds + 2 * k * inner_samples + 2 * k * outer_samples + k);
}

TEST_CASE("zero-one mode on random constant-sum games never mislabels a pure cell") {
  Rng rng(515);
  ZeroSumWsneOptions floor;
  floor.stage_accuracy_floor = 0.05;
  for (int trial = 0; trial < 8; ++trial) {
    BimatrixGame game =
        generate_game(GeneratorKind::kZeroOneConstantSum, 20, rng.next_u64());
    MatrixOracle oracle(game);
    KsOutcome out = ks_query_wsne(oracle, 0.25, rng.next_u64(), KsMode::kZeroOne, floor);
    if (out.status != RunStatus::kOk) continue;
    if (out.branch == KsBranch::kPureFromLemma) {
      // Constant-sum zero-one games have no (1,1) cell, so a pure claim
      // would be a bug; the checks must instead have passed.
      FAIL("pure branch is impossible when R + C is identically 1");
    }
    CHECK(is_eps_wsne(game, out.profile, 0.5 + 0.25));
  }
}

TEST_CASE("exact pipeline at tiny size matches the composed query formula") {
  const int k = 2;
  const double eps = 0.99;
  BimatrixGame game = generate_game(GeneratorKind::kUniform, k, 2222);
  MatrixOracle oracle(game);
  KsOutcome out = ks_query_wsne(oracle, eps, 3, KsMode::kGeneral);
  REQUIRE(out.status == RunStatus::kOk);
  const double stage = (eps / 10.0) * (eps / 10.0) / 24.0;
  const int64_t rounds = MwuConfig::rounds_for(k, stage);
  const int64_t inner_samples = estimate_sample_count(k, stage);
  const int64_t outer_samples = estimate_sample_count(k, eps / 10.0);
  int64_t expected = 2 * k * rounds + 2 * k * inner_samples + 2 * k * outer_samples;
  if (out.branch == KsBranch::kPureFromLemma) expected += k;
  CHECK(out.queries == expected);
  CHECK(is_eps_wsne(game, out.profile, 2.0 / 3.0 + eps));
}
