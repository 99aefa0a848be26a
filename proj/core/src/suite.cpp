// Suite expansion and execution.
#include "mazurlab/suite.hpp"

#include <cmath>
#include <exception>

#include "mazurlab/parallel.hpp"

namespace mazurlab {

void SuiteConfig::validate() const {
  if (trials <= 0) throw ConfigError("suite trials must be > 0");
  if (!(cap > 0.0)) throw ConfigError("suite ratio cap must be > 0");
  if (grids.dims.empty() || grids.thetas.empty() || grids.ps.empty() ||
      grids.qs.empty() || grids.alphas.empty())
    throw ConfigError("suite grids must be nonempty");
  for (int d : grids.dims)
    if (d < 1) throw ConfigError("suite dims must be >= 1");
  for (double t : grids.thetas)
    if (!(t > 0.0 && t <= 1.0)) throw ConfigError("suite thetas must lie in (0, 1]");
  for (double p : grids.ps)
    if (!std::isfinite(p) || p < 1.0) throw ConfigError("suite ps must be >= 1");
  for (double q : grids.qs)
    if (!std::isfinite(q) || q < 1.0) throw ConfigError("suite qs must be >= 1");
  for (double a : grids.alphas)
    if (!std::isfinite(a) || a <= 1.0) throw ConfigError("suite alphas must be > 1");
}

std::vector<Lemma> SuiteConfig::effective_lemmas() const {
  if (!lemmas.empty()) return lemmas;
  return {Lemma::power_contraction,  Lemma::power_expansion,
          Lemma::alpha_lipschitz,    Lemma::commutator_up,
          Lemma::commutator_down,    Lemma::anticommutator_up,
          Lemma::anticommutator_down, Lemma::jensen_chain,
          Lemma::selfadjoint_commutator, Lemma::mazur_theorem,
          Lemma::holder_product};
}

std::vector<CellParams> build_cells(const SuiteConfig& config) {
  config.validate();
  std::vector<CellParams> cells;
  auto base = [&](Lemma lemma, int dim) {
    CellParams c;
    c.lemma = lemma;
    c.dim = dim;
    c.cap = config.cap;
    return c;
  };
  for (Lemma lemma : config.effective_lemmas()) {
    for (int dim : config.grids.dims) {
      switch (lemma) {
        case Lemma::power_contraction:
        case Lemma::power_expansion:
        case Lemma::commutator_up:
        case Lemma::commutator_down:
        case Lemma::anticommutator_up:
        case Lemma::anticommutator_down:
          for (double theta : config.grids.thetas)
            for (double p : config.grids.ps) {
              CellParams c = base(lemma, dim);
              c.theta = theta;
              c.p = p;
              cells.push_back(c);
            }
          break;
        case Lemma::alpha_lipschitz:
          for (double alpha : config.grids.alphas)
            for (double p : config.grids.ps) {
              CellParams c = base(lemma, dim);
              c.alpha = alpha;
              c.p = p;
              cells.push_back(c);
            }
          break;
        case Lemma::jensen_chain:
          for (double theta : config.grids.thetas) {
            if (theta > 0.5 + 1e-12) continue;
            CellParams c = base(lemma, dim);
            c.theta = theta;
            c.p = 1.0;
            cells.push_back(c);
          }
          break;
        case Lemma::selfadjoint_commutator:
        case Lemma::mazur_theorem:
          for (double p : config.grids.ps)
            for (double q : config.grids.qs) {
              CellParams c = base(lemma, dim);
              c.p = p;
              c.q = q;
              cells.push_back(c);
            }
          break;
        case Lemma::holder_product:
          for (double p : config.grids.ps) {
            CellParams c = base(lemma, dim);
            c.p = p;
            cells.push_back(c);
          }
          break;
      }
    }
  }
  return cells;
}

SuiteResult run_suite(const SuiteConfig& config) {
  SuiteResult result;
  result.config = config;
  const std::vector<CellParams> cells = build_cells(config);
  const int trials = config.trials;
  result.records.resize(cells.size() * static_cast<size_t>(trials));
  const int threads = resolve_thread_count(config.threads);

  parallel_for(cells.size(), threads, [&](size_t c) {
    for (int t = 0; t < trials; ++t) {
      const uint64_t seed = derive_seed(config.seed, c, static_cast<uint64_t>(t));
      CheckRecord rec;
      try {
        rec = run_trial(cells[c], seed);
      } catch (const std::exception& e) {
        rec = CheckRecord{};
        rec.lemma = cells[c].lemma;
        rec.dim = cells[c].dim;
        rec.p = cells[c].p;
        rec.q = cells[c].q;
        rec.theta = cells[c].theta;
        rec.alpha = cells[c].alpha;
        rec.seed = seed;
        rec.status = CheckStatus::error;
        rec.note = e.what();
      }
      rec.trial = t;
      result.records[c * static_cast<size_t>(trials) + t] = rec;
    }
  });

  result.summary.cells.resize(cells.size());
  for (size_t c = 0; c < cells.size(); ++c) {
    CellSummary& s = result.summary.cells[c];
    s.params = cells[c];
    s.index = c;
    s.trials = trials;
    for (int t = 0; t < trials; ++t) {
      const CheckRecord& rec = result.records[c * static_cast<size_t>(trials) + t];
      switch (rec.status) {
        case CheckStatus::fail:
          ++s.failures;
          break;
        case CheckStatus::skipped_degenerate:
          ++s.skipped;
          break;
        case CheckStatus::error:
          ++s.errors;
          break;
        case CheckStatus::pass:
          break;
      }
      if (std::isfinite(rec.ratio) &&
          (std::isnan(s.max_ratio) || rec.ratio > s.max_ratio)) {
        s.max_ratio = rec.ratio;
        s.worst_seed = rec.seed;
        s.worst_lhs = rec.lhs;
        s.worst_rhs = rec.rhs_structural;
      }
    }
    result.summary.failures += s.failures;
    result.summary.errors += s.errors;
    result.summary.skipped += s.skipped;
  }
  for (Lemma lemma : config.effective_lemmas()) {
    double best = CheckRecord::nan_value();
    for (const CellSummary& s : result.summary.cells) {
      if (s.params.lemma != lemma || std::isnan(s.max_ratio)) continue;
      if (std::isnan(best) || s.max_ratio > best) best = s.max_ratio;
    }
    result.summary.max_ratios.emplace_back(lemma, best);
  }
  return result;
}

CheckRecord replay_trial(const SuiteConfig& config, size_t cell_index, int trial_index) {
  const std::vector<CellParams> cells = build_cells(config);
  if (cell_index >= cells.size())
    throw ConfigError("replay: cell index out of range");
  if (trial_index < 0 || trial_index >= config.trials)
    throw ConfigError("replay: trial index out of range");
  const uint64_t seed =
      derive_seed(config.seed, cell_index, static_cast<uint64_t>(trial_index));
  CheckRecord rec = run_trial(cells[cell_index], seed);
  rec.trial = trial_index;
  return rec;
}

}  // namespace mazurlab
