// Adversarial estimation of the Hoelder constants: random-restart hill
// climbing over pairs in the closed unit p-ball, maximizing the ratio
//   |M_{p,q}(x) - M_{p,q}(y)|_q / |x - y|_p^{min(p/q,1)}.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mazurlab/mazur.hpp"
#include "mazurlab/rng.hpp"

namespace mazurlab {

// Pairs closer than this in the p-norm have no usable ratio; holder_ratio
// throws DegeneratePairError for them.
inline constexpr double kSearchDegenerateTol = 1e-6;

// The ratio above.  Inputs with p-norm above 1 are scaled onto the sphere
// first, so the function is defined on all pairs.
double holder_ratio(const Element& x, const Element& y, const MazurParams& params);

enum class SearchMode {
  general,      // arbitrary complex entries
  selfadjoint,  // both points kept self-adjoint
  psd,          // both points kept positive semidefinite
};

const char* search_mode_name(SearchMode m);
SearchMode search_mode_from_name(const std::string& name);

struct SearchParams {
  double p = 1.0;
  double q = 2.0;
  int dim = 1;  // single block of this dimension, weight 1
  SearchMode mode = SearchMode::general;
  int restarts = 8;
  int iterations = 2000;  // proposals per restart
  double initial_step = 0.0;  // <= 0 picks 0.3 / dim
  uint64_t seed = 1;

  void validate() const;
  double step0() const { return initial_step > 0.0 ? initial_step : 0.3 / dim; }
};

struct SearchHistoryEntry {
  int restart = 0;
  int iteration = 0;  // -1 marks a restart's starting point
  double ratio = 0.0;
};

struct SearchResult {
  SearchParams params;
  double best_ratio = 0.0;
  Element best_x, best_y;
  long proposals = 0;  // ratio evaluations across all restarts
  uint64_t seed = 0;
  // Accepted ratios in order; nondecreasing within each restart.
  std::vector<SearchHistoryEntry> history;
};

// Hill climb: Gaussian entrywise proposals on both points, projection into
// the ball, accept only strict improvements.  After 20 consecutive
// rejections the step halves; a restart ends when the step drops below
// 1e-7 or the proposal budget runs out.
SearchResult maximize(const SearchParams& params);

struct SweepRow {
  double p = 0.0;
  double q = 0.0;
  double best_ratio = 0.0;
  uint64_t seed = 0;
  long iters = 0;
};

// maximize() across a (p, q) grid; each pair gets a seed derived from the
// base parameters' seed and its grid coordinates.
std::vector<SweepRow> sweep(const SearchParams& base, const std::vector<double>& ps,
                            const std::vector<double>& qs);

}  // namespace mazurlab
