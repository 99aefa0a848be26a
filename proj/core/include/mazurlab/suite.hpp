// Randomized verification suite.  A configuration expands into a list of
// cells (lemma x grid point); every cell runs a fixed number of seeded
// trials.  The seed of trial t in cell c is derive_seed(base, c, t), so a
// record's (cell, trial) coordinates replay it exactly, independent of
// thread count.
#pragma once

#include <cstdint>
#include <vector>

#include "mazurlab/checks.hpp"

namespace mazurlab {

struct SuiteGrids {
  std::vector<int> dims{1, 2, 3, 4, 5, 6};
  std::vector<double> thetas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> ps{1.0, 1.5, 2.0, 4.0};
  std::vector<double> qs{1.0, 1.1, 1.5, 2.0, 4.0};
  std::vector<double> alphas{1.5, 2.7, 4.0};
};

struct SuiteConfig {
  std::vector<Lemma> lemmas;  // empty means every lemma
  SuiteGrids grids;
  int trials = 200;
  uint64_t seed = 1;
  double cap = kDefaultRatioCap;
  int threads = 0;  // <= 0: resolve from MAZURLAB_THREADS / hardware

  // Throws ConfigError on empty grids or out-of-range entries.
  void validate() const;
  std::vector<Lemma> effective_lemmas() const;
};

// The cell list a config expands to, in a fixed documented order: lemmas
// in config order, then dim, then theta/alpha (outer) and p, q (inner)
// as applicable to the lemma.
std::vector<CellParams> build_cells(const SuiteConfig& config);

struct CellSummary {
  CellParams params;
  size_t index = 0;
  int trials = 0;
  int failures = 0;
  int skipped = 0;
  int errors = 0;
  double max_ratio = CheckRecord::nan_value();  // largest finite ratio seen
  uint64_t worst_seed = 0;                      // seed attaining max_ratio
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
};

struct SuiteSummary {
  std::vector<CellSummary> cells;
  int failures = 0;
  int errors = 0;
  int skipped = 0;
  // Largest finite ratio per lemma, in effective-lemma order.
  std::vector<std::pair<Lemma, double>> max_ratios;
};

struct SuiteResult {
  SuiteConfig config;
  std::vector<CheckRecord> records;  // cell-major, trial-minor
  SuiteSummary summary;
};

// Runs every cell.  Trials that throw become records with status error and
// the exception text in the note.
SuiteResult run_suite(const SuiteConfig& config);

// Re-runs one trial of one cell of the expanded configuration.
CheckRecord replay_trial(const SuiteConfig& config, size_t cell_index, int trial_index);

}  // namespace mazurlab
