#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qnash/game.hpp"
#include "qnash/oracle.hpp"
#include "qnash/profile.hpp"
#include "qnash/status.hpp"
#include "qnash/zerosum_wsne.hpp"

namespace qnash {

enum class GeneratorKind { kUniform, kZeroOneConstantSum, kZeroSum, kGk, kFile };

GeneratorKind parse_generator(const std::string& name);
const char* to_string(GeneratorKind kind);

// Seeded random game constructors. uniform: entries i.i.d. U[0,1];
// zero-one-constant-sum: R i.i.d. fair coin, C = 1 - R; zero-sum: R i.i.d.
// U[-1,1], C = -R. Hidden-column draws live in gk_sample.
BimatrixGame generate_game(GeneratorKind kind, int k, uint64_t seed);

// Per-algorithm tuning forwarded into the solvers.
struct AlgoOptions {
  double c0 = 16.0;
  std::optional<double> inner_floor;  // zero-sum stage accuracy floor (ks)
};

// Registered algorithm ids: mwu, zerosum-wsne, bbm, ks, ks-zero-one,
// uniform-sampler.
const std::vector<std::string>& algorithm_ids();
bool is_known_algorithm(const std::string& id);

// One run of a named algorithm against an oracle. Algorithms that assume a
// zero-sum game (mwu, zerosum-wsne) run on the (R-C, C-R) transform when the
// oracle serves a [0,1] game. Budget exhaustion yields the algorithm's
// best-effort profile (its current average, or uniform) so adversary
// experiments always have a claimed profile to complete against.
struct AlgoRun {
  MixedProfile profile;
  RunStatus status = RunStatus::kOk;
  std::string branch;
};
AlgoRun run_algorithm(const std::string& id, QueryOracle& oracle, double eps,
                      uint64_t seed, const AlgoOptions& options = {});

struct ExperimentSpec {
  std::string algorithm;
  int k = 2;
  double eps = 0.1;
  int trials = 1;
  uint64_t seed = 0;
  std::optional<int64_t> budget;
  GeneratorKind generator = GeneratorKind::kUniform;
  std::string game_file;  // generator == kFile
  std::string out_path;   // empty: no file written
  int threads = 1;
  // Wall time breaks byte-for-byte reproducibility of the CSV, so the
  // wall_time_ms column is 0 unless explicitly requested.
  bool measure_time = false;
  AlgoOptions algo;
};

struct TrialRecord {
  uint64_t seed = 0;
  int64_t queries = 0;
  bool success = false;
  double regret = 0.0;
  double wsne_violation = 0.0;
  std::string branch;
  int64_t wall_time_ms = 0;
};

// Runs spec.trials seeded trials: generate or load the game, wrap it in a
// counting (optionally budgeted) oracle, run the algorithm, then score the
// output with the exact verifier — success is never the algorithm's
// self-report. On hidden-column draws success means the refuter failed.
// Records are returned in trial order regardless of how trials were
// scheduled across threads, and written to spec.out_path when set.
std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec);

// Frozen CSV schema: seed,queries,success,regret,wsne_violation,branch,wall_time_ms.
extern const char* const kTrialCsvHeader;
void write_trial_csv(std::ostream& out, const std::vector<TrialRecord>& records);
std::string trial_csv(const std::vector<TrialRecord>& records);

}  // namespace qnash
