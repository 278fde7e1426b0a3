// Command-line front end: solve one game, run seeded benchmark batches,
// drive the adversary experiments, or verify a claimed profile.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qnash/adversary.hpp"
#include "qnash/bbm.hpp"
#include "qnash/game_io.hpp"
#include "qnash/harness.hpp"
#include "qnash/ks.hpp"
#include "qnash/regret.hpp"
#include "qnash/rng.hpp"

namespace {

using namespace qnash;

struct CommonArgs {
  int k = 16;
  double eps = 0.1;
  uint64_t seed = 1;
  std::string algo = "bbm";
  std::string generator = "uniform";
  std::string game_file;
  std::optional<int64_t> budget;
  double c0 = 16.0;
  double inner_floor = 0.05;
  bool paper_exact = false;
};

AlgoOptions algo_options(const CommonArgs& args) {
  AlgoOptions opts;
  opts.c0 = args.c0;
  if (!args.paper_exact && args.inner_floor > 0.0) opts.inner_floor = args.inner_floor;
  return opts;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_generator) {
  cmd->add_option("--k", args.k, "strategies per player");
  cmd->add_option("--eps", args.eps, "target accuracy");
  cmd->add_option("--seed", args.seed, "root seed");
  cmd->add_option("--algo", args.algo, "algorithm id")
      ->check(CLI::IsMember(algorithm_ids()));
  cmd->add_option("--budget", args.budget, "hard query budget");
  cmd->add_option("--c0", args.c0, "rounds constant for the weights solver");
  cmd->add_option("--inner-floor", args.inner_floor,
                  "stage-accuracy floor for the zero-sum WSNE pipeline (0 disables)");
  cmd->add_flag("--exact-pipeline", args.paper_exact,
                "run the zero-sum WSNE pipeline at its exact stage accuracy "
                "(expensive below eps ~ 0.5)");
  if (with_generator) {
    cmd->add_option("--generator", args.generator,
                    "uniform | zero-one-constant-sum | zero-sum | gk | file");
    cmd->add_option("--game", args.game_file, "game file (generator=file)");
  }
}

int cmd_solve(const CommonArgs& args, const std::string& out_profile) {
  GeneratorKind kind = parse_generator(args.generator);
  std::optional<HiddenColumnInstance> instance;
  std::optional<BimatrixGame> game;
  if (kind == GeneratorKind::kFile) {
    game = read_game_file(args.game_file).game;
  } else if (kind == GeneratorKind::kGk) {
    instance = gk_sample(args.k, mix_seed(args.seed, 101));
    game = instance->game;
  } else {
    game = generate_game(kind, args.k, mix_seed(args.seed, 101));
  }

  MatrixOracle oracle(*game);
  std::optional<BudgetedOracle> budgeted;
  QueryOracle* top = &oracle;
  if (args.budget) {
    budgeted.emplace(oracle, *args.budget);
    top = &*budgeted;
  }
  AlgoRun run = run_algorithm(args.algo, *top, args.eps, mix_seed(args.seed, 202),
                              algo_options(args));

  const BimatrixGame* claim_game = &*game;
  std::optional<BimatrixGame> transformed;
  if ((args.algo == "mwu" || args.algo == "zerosum-wsne") &&
      game->range() == PayoffRange::unit()) {
    transformed = derived_zero_sum(*game);
    claim_game = &*transformed;
  }
  RegretReport report = exact_regret(*claim_game, run.profile);

  // One line per run: algorithm,k,eps,branch,queries,regret,wsne_violation,success,seed
  bool success = report.max_regret() <= args.eps + kRegretTolerance;
  if (args.algo == "bbm") success = report.max_regret() <= bbm_alpha() + args.eps + kRegretTolerance;
  if (args.algo == "ks") success = report.max_wsne_violation() <= 2.0 / 3.0 + args.eps + kRegretTolerance;
  if (args.algo == "ks-zero-one")
    success = report.max_wsne_violation() <= 0.5 + args.eps + kRegretTolerance;
  if (args.algo == "zerosum-wsne")
    success = report.max_wsne_violation() <= args.eps + kRegretTolerance;
  std::printf("algorithm,k,eps,branch,queries,regret,wsne_violation,success,seed\n");
  std::printf("%s,%d,%s,%s,%lld,%s,%s,%d,%llu\n", args.algo.c_str(), game->k(),
              format_double(args.eps).c_str(), run.branch.c_str(),
              static_cast<long long>(top->ledger().total_count()),
              format_double(report.max_regret()).c_str(),
              format_double(report.max_wsne_violation()).c_str(), success ? 1 : 0,
              static_cast<unsigned long long>(args.seed));
  if (!out_profile.empty()) write_profile_file(out_profile, run.profile);
  return 0;
}

int cmd_bench(const CommonArgs& args, int trials, int threads, bool measure_time,
              const std::string& out) {
  ExperimentSpec spec;
  spec.algorithm = args.algo;
  spec.k = args.k;
  spec.eps = args.eps;
  spec.trials = trials;
  spec.seed = args.seed;
  spec.budget = args.budget;
  spec.generator = parse_generator(args.generator);
  spec.game_file = args.game_file;
  spec.out_path = out;
  spec.threads = threads;
  spec.measure_time = measure_time;
  spec.algo = algo_options(args);

  std::vector<TrialRecord> records = run_experiment(spec);
  int successes = 0;
  int64_t total_queries = 0;
  for (const auto& r : records) {
    successes += r.success ? 1 : 0;
    total_queries += r.queries;
  }
  if (out.empty()) write_trial_csv(std::cout, records);
  std::fprintf(stderr, "trials=%d successes=%d mean_queries=%.1f\n", trials, successes,
               static_cast<double>(total_queries) / trials);
  return 0;
}

int cmd_adversary(const CommonArgs& args, const std::string& mode, const std::string& out_prefix) {
  const uint64_t algo_seed = mix_seed(args.seed, 202);
  bool refuted = false;

  if (mode == "det") {
    DetAdversaryOracle oracle(args.k, args.eps);
    std::optional<BudgetedOracle> budgeted;
    QueryOracle* top = &oracle;
    if (args.budget) {
      budgeted.emplace(oracle, *args.budget);
      top = &*budgeted;
    }
    AlgoRun run = run_algorithm(args.algo, *top, args.eps, algo_seed, algo_options(args));
    BimatrixGame completed = det_adversary_complete(oracle.partial_game(), run.profile,
                                                    RationalEps::from_double(args.eps));
    RegretReport report = exact_regret(completed, run.profile);
    refuted = report.max_regret() > 0.5 - args.eps + kRegretTolerance;
    std::printf("adversary=det algo=%s k=%d eps=%s queries=%lld max_regret=%s refuted=%d\n",
                args.algo.c_str(), args.k, format_double(args.eps).c_str(),
                static_cast<long long>(oracle.ledger().total_count()),
                format_double(report.max_regret()).c_str(), refuted ? 1 : 0);
    if (!out_prefix.empty()) {
      write_game_file(out_prefix + ".game", completed);
      write_profile_file(out_prefix + ".profile", run.profile);
      std::ofstream ledger_out(out_prefix + ".ledger.csv");
      oracle.ledger().write_csv(ledger_out);
    }
  } else if (mode == "gk") {
    HiddenColumnInstance instance = gk_sample(args.k, mix_seed(args.seed, 101));
    MatrixOracle oracle(instance.game);
    std::optional<BudgetedOracle> budgeted;
    QueryOracle* top = &oracle;
    if (args.budget) {
      budgeted.emplace(oracle, *args.budget);
      top = &*budgeted;
    }
    AlgoRun run = run_algorithm(args.algo, *top, args.eps, algo_seed, algo_options(args));
    HalfgameRefutation ref = halfgame_refute(instance, run.profile);
    refuted = ref.refuted;
    std::printf(
        "adversary=gk algo=%s k=%d queries=%lld hidden_mass=%s max_regret=%s refuted=%d\n",
        args.algo.c_str(), args.k, static_cast<long long>(top->ledger().total_count()),
        format_double(ref.hidden_mass).c_str(), format_double(ref.max_regret).c_str(),
        refuted ? 1 : 0);
    if (!out_prefix.empty()) {
      write_game_file(out_prefix + ".game", instance.game, instance.hidden_column);
      write_profile_file(out_prefix + ".profile", run.profile);
    }
  } else if (mode == "zeros") {
    AllZerosOracle oracle(args.k);
    std::optional<BudgetedOracle> budgeted;
    QueryOracle* top = &oracle;
    if (args.budget) {
      budgeted.emplace(oracle, *args.budget);
      top = &*budgeted;
    }
    AlgoRun run = run_algorithm(args.algo, *top, args.eps, algo_seed, algo_options(args));
    std::optional<BimatrixGame> witness = zero_adversary_refute(oracle.ledger(), run.profile, args.eps);
    refuted = witness.has_value();
    std::printf("adversary=zeros algo=%s k=%d queries=%lld witness=%d\n", args.algo.c_str(),
                args.k, static_cast<long long>(oracle.ledger().total_count()), refuted ? 1 : 0);
    if (!out_prefix.empty()) {
      write_profile_file(out_prefix + ".profile", run.profile);
      if (witness) write_game_file(out_prefix + ".witness.game", *witness);
    }
  } else {
    std::fprintf(stderr, "unknown adversary mode: %s\n", mode.c_str());
    return 2;
  }
  return refuted ? 1 : 0;
}

int cmd_verify(const std::string& game_path, const std::string& profile_path, double eps) {
  GameFile gf = read_game_file(game_path);
  MixedProfile profile = read_profile_file(profile_path, gf.game.k());
  RegretReport report = exact_regret(gf.game, profile);
  std::printf("row_regret=%s col_regret=%s row_best=%s col_best=%s row_wsne=%s col_wsne=%s\n",
              format_double(report.row_regret).c_str(), format_double(report.col_regret).c_str(),
              format_double(report.row_best_response_payoff).c_str(),
              format_double(report.col_best_response_payoff).c_str(),
              format_double(report.row_wsne_violation).c_str(),
              format_double(report.col_wsne_violation).c_str());
  std::printf("is_eps_ne=%d is_eps_wsne=%d (eps=%s)\n",
              is_eps_ne(gf.game, profile, eps) ? 1 : 0,
              is_eps_wsne(gf.game, profile, eps) ? 1 : 0, format_double(eps).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bimatrix games behind a counting payoff-query oracle"};
  app.require_subcommand(1);

  CommonArgs solve_args, bench_args, adv_args;
  std::string solve_out, bench_out, adv_prefix, adv_mode = "det";
  int bench_trials = 10, bench_threads = 1;
  bool bench_time = false;
  std::string verify_game, verify_profile;
  double verify_eps = 0.0;

  CLI::App* solve = app.add_subcommand("solve", "run one algorithm on one game");
  add_common(solve, solve_args, /*with_generator=*/true);
  solve->add_option("--out", solve_out, "write the output profile here");

  CLI::App* bench = app.add_subcommand("bench", "seeded batch of trials, CSV output");
  add_common(bench, bench_args, /*with_generator=*/true);
  bench->add_option("--trials", bench_trials, "number of trials");
  bench->add_option("--threads", bench_threads, "worker threads");
  bench->add_flag("--measure-time", bench_time,
                  "record wall time per trial (breaks byte reproducibility)");
  bench->add_option("--out", bench_out, "CSV output path");

  CLI::App* adv = app.add_subcommand("adversary",
                                     "run an algorithm against an adversary; exits nonzero if "
                                     "the output is refuted");
  add_common(adv, adv_args, /*with_generator=*/false);
  adv->add_option("--adversary", adv_mode, "det | gk | zeros");
  adv->add_option("--out", adv_prefix, "artifact path prefix");

  CLI::App* verify = app.add_subcommand("verify", "exact regret report for game + profile files");
  verify->add_option("--game", verify_game, "game file")->required();
  verify->add_option("--profile", verify_profile, "profile file")->required();
  verify->add_option("--eps", verify_eps, "threshold for the eps predicates");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(solve_args, solve_out);
    if (bench->parsed())
      return cmd_bench(bench_args, bench_trials, bench_threads, bench_time, bench_out);
    if (adv->parsed()) return cmd_adversary(adv_args, adv_mode, adv_prefix);
    if (verify->parsed()) return cmd_verify(verify_game, verify_profile, verify_eps);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
