#pragma once

namespace qnash {

// Outcome classification for one solver run. Everything except kOk is a
// recoverable, per-trial failure: it counts against the algorithm's success
// probability rather than aborting an experiment.
enum class RunStatus {
  kOk,
  // A hard query budget was hit; the result carries best-effort output.
  kBudgetExhausted,
  // The equilibrium-to-well-supported conversion detected that its inputs
  // cannot have met their accuracy claims (too much mass on far-from-best
  // strategies).
  kConversionRejected,
  // A row/column scan promised by an estimate found no qualifying cell, so
  // the upstream estimate must have been bad.
  kLocateFailed,
};

const char* to_string(RunStatus status);

}  // namespace qnash
