#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qnash/brute_force.hpp"
#include "qnash/harness.hpp"
#include "qnash/mwu.hpp"
#include "qnash/payoff_vector.hpp"
#include "qnash/regret.hpp"
#include "qnash/rng.hpp"
#include "qnash/zerosum_wsne.hpp"
#include "test_util.hpp"

using namespace qnash;
using namespace qnash::testutil;
using Catch::Approx;

namespace {

ApproxPayoffVector vector_of(std::vector<double> values, double accuracy = 0.0,
                             Player player = Player::kRow) {
  ApproxPayoffVector v;
  v.values = std::move(values);
  v.accuracy = accuracy;
  v.player = player;
  return v;
}

}  // namespace

TEST_CASE("sample count follows ceil(8 ln k / eps^2)") {
  CHECK(estimate_sample_count(200, 0.1) ==
        static_cast<int64_t>(std::ceil(8.0 * std::log(200.0) / 0.01)));
  CHECK(estimate_sample_count(2, 1.0) == 6);  // ceil(8*ln2) = ceil(5.545)
  CHECK_THROWS_AS(estimate_sample_count(2, 0.0), std::invalid_argument);
}

TEST_CASE("estimating against a pure opponent is exact") {
  BimatrixGame game = generate_game(GeneratorKind::kUniform, 5, 31);
  MatrixOracle oracle(game);
  EstimateResult res =
      estimate_payoff_vector(oracle, pure_distribution(5, 3), Player::kRow, 0.3, 7);
  REQUIRE(res.status == RunStatus::kOk);
  // Zero sampling variance; only summation rounding is left.
  for (int i = 0; i < 5; ++i) CHECK(res.vector.values[i] == Approx(game.r(i, 3)).margin(1e-9));
  CHECK(res.vector.sample_count_per_entry == estimate_sample_count(5, 0.3));
  CHECK(oracle.ledger().total_count() == 5 * res.vector.sample_count_per_entry);
}

TEST_CASE("estimating a constant game is exact for any strategy") {
  Matrix r = Matrix::square(4, 0.7), c = Matrix::square(4, 0.2);
  BimatrixGame game(std::move(r), std::move(c), PayoffRange::unit());
  MatrixOracle oracle(game);
  Rng rng(5);
  EstimateResult res = estimate_payoff_vector(oracle, random_distribution(4, rng),
                                              Player::kColumn, 0.5, 11);
  for (double v : res.vector.values) CHECK(v == Approx(0.2).margin(1e-12));
}

TEST_CASE("estimate rejects degenerate opponent strategies") {
  MatrixOracle oracle(matching_pennies());
  CHECK_THROWS_AS(estimate_payoff_vector(oracle, {0.5, 0.6}, Player::kRow, 0.1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_payoff_vector(oracle, {1.5, -0.5}, Player::kRow, 0.1, 1),
                  std::invalid_argument);
}

TEST_CASE("estimates land within eps of the exact vector almost always") {
  const int k = 50;
  const double eps = 0.15;
  BimatrixGame game = generate_game(GeneratorKind::kUniform, k, 404);
  Rng rng(405);
  std::vector<double> y = random_distribution(k, rng);
  MixedProfile profile{uniform_distribution(k), y};
  ApproxPayoffVector exact = exact_payoff_vector(game, profile, Player::kRow);

  int hits = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    MatrixOracle oracle(game);
    EstimateResult res = estimate_payoff_vector(oracle, y, Player::kRow, eps, seed);
    double worst = 0.0;
    for (int i = 0; i < k; ++i)
      worst = std::max(worst, std::abs(res.vector.values[i] - exact.values[i]));
    if (worst <= eps) ++hits;
    CHECK(oracle.ledger().total_count() ==
          static_cast<int64_t>(k) * res.vector.sample_count_per_entry);
  }
  CHECK(hits >= 18);
}

TEST_CASE("best response according to an estimate breaks ties to the lowest index") {
  CHECK(approx_best_response(vector_of({0.2, 0.9, 0.9})) == 1);
  CHECK(approx_best_response(vector_of({0.9, 0.2, 0.9})) == 0);
}

TEST_CASE("regret according to an estimate") {
  ApproxPayoffVector v = vector_of({0.2, 0.9, 0.9});
  CHECK(approx_regret(v, {0.0, 1.0, 0.0}) == Approx(0.0).margin(1e-12));
  CHECK(approx_regret(v, {1.0, 0.0, 0.0}) == Approx(0.7).margin(1e-12));
}

TEST_CASE("adding a constant to every entry leaves the best response unchanged") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 2 + rng.next_index(8);
    std::vector<double> values(k);
    for (double& v : values) v = rng.next_double(-1.0, 1.0);
    double shift = rng.next_double(-5.0, 5.0);
    ApproxPayoffVector base = vector_of(values);
    for (double& v : values) v += shift;
    ApproxPayoffVector shifted = vector_of(std::move(values));
    CHECK(approx_best_response(base) == approx_best_response(shifted));
  }
}

TEST_CASE("exact payoff vectors reproduce the exact regret") {
  Rng rng(88);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 2 + rng.next_index(5);
    BimatrixGame game = generate_game(GeneratorKind::kUniform, k, rng.next_u64());
    MixedProfile profile = random_profile(k, rng);
    RegretReport report = exact_regret(game, profile);
    double by_r = approx_regret(exact_payoff_vector(game, profile, Player::kRow), profile.x);
    double by_c = approx_regret(exact_payoff_vector(game, profile, Player::kColumn), profile.y);
    CHECK(by_r == Approx(report.row_regret).margin(1e-12));
    CHECK(by_c == Approx(report.col_regret).margin(1e-12));
  }
}

TEST_CASE("weights solver on the all-zeros game has zero regret and exact query count") {
  BimatrixGame game = zero_sum_game(Matrix::square(4, 0.0));
  MatrixOracle oracle(game);
  MwuConfig cfg = MwuConfig::for_epsilon(4, 0.5, 9);
  MwuResult res = mwu_zero_sum(oracle, cfg);
  REQUIRE(res.status == RunStatus::kOk);
  CHECK(res.queries == 2 * 4 * cfg.rounds);
  CHECK(res.rounds_completed == cfg.rounds);
  CHECK(exact_regret(game, res.profile).max_regret() == Approx(0.0).margin(1e-12));
  // Nothing ever moves the weights, so the average stays uniform.
  for (double p : res.profile.x) CHECK(p == Approx(0.25).margin(1e-12));
}

TEST_CASE("weights solver approximates matching pennies") {
  BimatrixGame game = matching_pennies_zero_sum();
  double value = brute_force_equilibrium(game).value;
  CHECK(value == Approx(0.0).margin(1e-9));
  MatrixOracle oracle(game);
  MwuResult res = mwu_zero_sum(oracle, MwuConfig::for_epsilon(2, 0.1, 17));
  REQUIRE(res.status == RunStatus::kOk);
  RegretReport report = exact_regret(game, res.profile);
  CHECK(report.max_regret() <= 0.1);
  CHECK(row_payoff(game, res.profile) == Approx(value).margin(0.1));
}

TEST_CASE("weights solver validates its inputs") {
  BimatrixGame game = matching_pennies_zero_sum();
  MatrixOracle oracle(game);
  MwuConfig cfg = MwuConfig::for_epsilon(2, 0.5, 1);
  cfg.rounds = 0;
  CHECK_THROWS_AS(mwu_zero_sum(oracle, cfg), std::invalid_argument);
  MatrixOracle unit(matching_pennies());
  CHECK_THROWS_AS(mwu_zero_sum(unit, MwuConfig::for_epsilon(2, 0.5, 1)),
                  std::invalid_argument);
}

TEST_CASE("weights solver under a budget returns its running average") {
  BimatrixGame game = generate_game(GeneratorKind::kZeroSum, 6, 5);
  MatrixOracle inner(game);
  BudgetedOracle oracle(inner, 2 * 6 * 10 + 3);  // ten full rounds plus a partial one
  MwuResult res = mwu_zero_sum(oracle, MwuConfig::for_epsilon(6, 0.1, 3));
  CHECK(res.status == RunStatus::kBudgetExhausted);
  CHECK(res.rounds_completed == 10);
  CHECK(res.queries == inner.ledger().total_count());
  validate_profile(res.profile, 6);
}

TEST_CASE("conversion leaves exact equilibria untouched") {
  BimatrixGame game = generate_game(GeneratorKind::kUniform, 4, 2024);
  MixedProfile profile = brute_force_equilibrium(game).profile;
  ApproxPayoffVector r = exact_payoff_vector(game, profile, Player::kRow);
  ApproxPayoffVector c = exact_payoff_vector(game, profile, Player::kColumn);
  ConvertResult res = ne_to_wsne(profile, r, c, 0.5);
  REQUIRE(res.status == RunStatus::kOk);
  CHECK(res.profile == profile);
  CHECK(res.row_mass_shifted == 0.0);
  CHECK(res.col_mass_shifted == 0.0);
  CHECK(is_eps_wsne(game, res.profile, 0.0));
}

TEST_CASE("conversion shifts exactly the far-from-best mass") {
  // With eps = 1 the far set contains the entries more than 0.25 below the
  // best: only index 1 here (0.9 > 0.6 + 0.25 but 0.9 <= 0.88 + 0.25).
  ApproxPayoffVector r = vector_of({0.9, 0.6, 0.88});
  ApproxPayoffVector c = vector_of({0.5, 0.5, 0.5}, 0.0, Player::kColumn);
  MixedProfile profile{{0.5, 0.2, 0.3}, {0.2, 0.3, 0.5}};
  ConvertResult res = ne_to_wsne(profile, r, c, 1.0);
  REQUIRE(res.status == RunStatus::kOk);
  CHECK(res.row_mass_shifted == Approx(0.2));
  CHECK(res.profile.x[0] == Approx(0.7));
  CHECK(res.profile.x[1] == 0.0);
  CHECK(res.profile.x[2] == Approx(0.3));
  CHECK(res.profile.y == profile.y);
}

TEST_CASE("conversion rejects impossible inputs") {
  // 0.6 mass sits more than eps/4 below the best entry; a genuine
  // eps^2/24-equilibrium could carry at most eps/2 = 0.5 there.
  ApproxPayoffVector r = vector_of({0.9, 0.1, 0.9});
  ApproxPayoffVector c = vector_of({0.5, 0.5, 0.5}, 0.0, Player::kColumn);
  MixedProfile profile{{0.2, 0.6, 0.2}, {0.4, 0.3, 0.3}};
  ConvertResult res = ne_to_wsne(profile, r, c, 1.0);
  CHECK(res.status == RunStatus::kConversionRejected);
  CHECK(res.profile == profile);

  // Accuracy claims above eps^2/24 are a caller bug, not a run failure.
  ApproxPayoffVector coarse = vector_of({0.9, 0.1, 0.9}, 0.2);
  CHECK_THROWS_AS(ne_to_wsne(profile, coarse, c, 0.5), std::invalid_argument);
}

TEST_CASE("converted profiles avoid the far sets and stay distributions") {
  Rng rng(3141);
  int accepted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int k = 2 + rng.next_index(6);
    double eps = 0.2 + 0.8 * rng.next_double();
    // Half the fixtures are nearly flat, as genuine near-equilibrium inputs
    // would be; the rest stress the rejection path.
    double spread = trial % 2 == 0 ? eps / 8.0 : 1.0;
    std::vector<double> rv(k), cv(k);
    for (double& v : rv) v = 0.5 + spread * (rng.next_double() - 0.5);
    for (double& v : cv) v = 0.5 + spread * (rng.next_double() - 0.5);
    ApproxPayoffVector r = vector_of(rv);
    ApproxPayoffVector c = vector_of(cv, 0.0, Player::kColumn);
    MixedProfile profile = random_profile(k, rng, trial % 2 == 0);
    ConvertResult res = ne_to_wsne(profile, r, c, eps);
    if (res.status != RunStatus::kOk) continue;
    ++accepted;
    validate_profile(res.profile, k);
    CHECK(res.row_mass_shifted <= eps / 2 + 1e-9);
    CHECK(res.col_mass_shifted <= eps / 2 + 1e-9);
    double r_best = rv[approx_best_response(r)];
    double c_best = cv[approx_best_response(c)];
    for (int i = 0; i < k; ++i) {
      if (res.profile.x[i] > 0.0) CHECK(rv[i] >= r_best - eps / 4 - 1e-12);
      if (res.profile.y[i] > 0.0) CHECK(cv[i] >= c_best - eps / 4 - 1e-12);
    }
  }
  CHECK(accepted > 50);
}

TEST_CASE("zero-sum WSNE pipeline on the all-zeros game") {
  BimatrixGame game = zero_sum_game(Matrix::square(3, 0.0));
  MatrixOracle oracle(game);
  ZeroSumWsneResult res = zerosum_wsne(oracle, 0.5, 21);
  REQUIRE(res.status == RunStatus::kOk);
  CHECK(exact_regret(game, res.profile).max_wsne_violation() == Approx(0.0).margin(1e-12));
  CHECK(res.claimed_eps == 0.5);
}

TEST_CASE("zero-sum WSNE pipeline spends exactly solve plus estimate queries") {
  const int k = 10;
  const double eps = 0.6;
  BimatrixGame game = generate_game(GeneratorKind::kZeroSum, k, 808);
  MatrixOracle oracle(game);
  ZeroSumWsneResult res = zerosum_wsne(oracle, eps, 99);
  REQUIRE(res.status == RunStatus::kOk);
  const double stage = eps * eps / 24.0;
  const int64_t rounds = MwuConfig::rounds_for(k, stage);
  const int64_t samples = estimate_sample_count(k, stage);
  // The conversion itself is query-free, so this is the whole bill.
  CHECK(res.queries == 2 * k * rounds + 2 * k * samples);
  CHECK(res.queries == oracle.ledger().total_count());
  CHECK(res.stage_accuracy == Approx(stage));
}

TEST_CASE("zero-sum WSNE pipeline solves matching pennies") {
  BimatrixGame game = matching_pennies_zero_sum();
  MatrixOracle oracle(game);
  ZeroSumWsneResult res = zerosum_wsne(oracle, 0.4, 5);
  REQUIRE(res.status == RunStatus::kOk);
  CHECK(is_eps_wsne(game, res.profile, 0.4));
}

TEST_CASE("stage accuracy floor weakens the claim instead of the structure") {
  const int k = 12;
  BimatrixGame game = generate_game(GeneratorKind::kZeroSum, k, 31337);
  MatrixOracle oracle(game);
  ZeroSumWsneOptions options;
  options.stage_accuracy_floor = 0.05;
  ZeroSumWsneResult res = zerosum_wsne(oracle, 0.2, 4, options);
  REQUIRE(res.status == RunStatus::kOk);
  CHECK(res.stage_accuracy == Approx(0.05));
  CHECK(res.claimed_eps == Approx(std::sqrt(24.0 * 0.05)));
  const int64_t rounds = MwuConfig::rounds_for(k, 0.05);
  const int64_t samples = estimate_sample_count(k, 0.05);
  CHECK(res.queries == 2 * k * rounds + 2 * k * samples);
  // Loose claim, but the run is still typically far better than it.
  CHECK(is_eps_wsne(game, res.profile, res.claimed_eps));
}
