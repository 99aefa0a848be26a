// Hill-climb search for extremal Hoelder ratios.
#include "mazurlab/search.hpp"

#include <cmath>
#include <limits>

#include "mazurlab/eig.hpp"
#include "mazurlab/random_elements.hpp"
#include "mazurlab/schatten.hpp"

namespace mazurlab {

double holder_ratio(const Element& x, const Element& y, const MazurParams& params) {
  const PNorm pn(params.p);
  Element xs = x, ys = y;
  for (Element* e : {&xs, &ys}) {
    const double n = schatten_norm(*e, pn);
    if (n > 1.0) *e = cplx(1.0 / n, 0.0) * *e;
  }
  const double dist = schatten_norm(xs - ys, pn);
  if (dist < kSearchDegenerateTol)
    throw DegeneratePairError("holder_ratio: pair closer than 1e-6 in the p-norm");
  const double lhs =
      schatten_norm(mazur_map(xs, params) - mazur_map(ys, params), PNorm(params.q));
  return lhs / std::pow(dist, params.theta());
}

const char* search_mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::general:
      return "general";
    case SearchMode::selfadjoint:
      return "selfadjoint";
    case SearchMode::psd:
      return "psd";
  }
  return "unknown";
}

SearchMode search_mode_from_name(const std::string& name) {
  if (name == "general") return SearchMode::general;
  if (name == "selfadjoint") return SearchMode::selfadjoint;
  if (name == "psd") return SearchMode::psd;
  throw ConfigError("unknown search mode: " + name);
}

void SearchParams::validate() const {
  // Configuration-surface errors, so bad exponents report as such rather
  // than as numerical failures.
  if (!(std::isfinite(p) && p >= 1.0))
    throw ConfigError("search exponent p must be finite and >= 1");
  if (!(std::isfinite(q) && q >= 1.0))
    throw ConfigError("search exponent q must be finite and >= 1");
  if (dim < 1) throw ConfigError("search dim must be >= 1");
  if (restarts < 1) throw ConfigError("search restarts must be >= 1");
  if (iterations < 1) throw ConfigError("search iterations must be >= 1");
}

namespace {

// Projects onto the chosen structure, then into the closed unit ball.
Element constrain(const Element& x, SearchMode mode, PNorm pn) {
  Element r = x;
  if (mode == SearchMode::selfadjoint) r = symmetrize(r);
  if (mode == SearchMode::psd) r = pos_neg_parts(symmetrize(r)).plus;
  const double n = schatten_norm(r, pn);
  if (n > 1.0) r = cplx(1.0 / n, 0.0) * r;
  return r;
}

Element gaussian_step(const Element& x, double step, Rng& rng) {
  Element r = x;
  for (Mat& b : r.blocks)
    for (cplx& e : b.a) e += step * rng.cnormal();
  return r;
}

Element random_start(const AlgebraShape& shape, SearchMode mode, PNorm pn, Rng& rng) {
  Element x = random_gaussian(shape, rng);
  const double radius = rng.uniform_pos();
  const double n = schatten_norm(x, pn);
  if (n > 1e-12) x = cplx(radius / n, 0.0) * x;
  return constrain(x, mode, pn);
}

}  // namespace

SearchResult maximize(const SearchParams& params) {
  params.validate();
  const MazurParams mp(params.p, params.q);
  const PNorm pn(params.p);
  const AlgebraShape shape = AlgebraShape::simple(params.dim);
  Rng rng(params.seed);

  SearchResult result;
  result.params = params;
  result.seed = params.seed;
  result.best_ratio = -std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < params.restarts; ++restart) {
    Element x = random_start(shape, params.mode, pn, rng);
    Element y = random_start(shape, params.mode, pn, rng);
    double ratio = -std::numeric_limits<double>::infinity();
    try {
      ratio = holder_ratio(x, y, mp);
      ++result.proposals;
      result.history.push_back({restart, -1, ratio});
    } catch (const DegeneratePairError&) {
    }
    double step = params.step0();
    int rejects = 0;
    for (int iter = 0; iter < params.iterations; ++iter) {
      const Element xp = constrain(gaussian_step(x, step, rng), params.mode, pn);
      const Element yp = constrain(gaussian_step(y, step, rng), params.mode, pn);
      bool accepted = false;
      try {
        const double rp = holder_ratio(xp, yp, mp);
        ++result.proposals;
        if (rp > ratio) {
          ratio = rp;
          x = xp;
          y = yp;
          accepted = true;
          result.history.push_back({restart, iter, ratio});
        }
      } catch (const DegeneratePairError&) {
      }
      if (accepted) {
        rejects = 0;
      } else if (++rejects >= 20) {
        rejects = 0;
        step *= 0.5;
        if (step < 1e-7) break;
      }
    }
    if (ratio > result.best_ratio) {
      result.best_ratio = ratio;
      result.best_x = x;
      result.best_y = y;
    }
  }
  return result;
}

std::vector<SweepRow> sweep(const SearchParams& base, const std::vector<double>& ps,
                            const std::vector<double>& qs) {
  std::vector<SweepRow> rows;
  rows.reserve(ps.size() * qs.size());
  for (size_t i = 0; i < ps.size(); ++i) {
    for (size_t j = 0; j < qs.size(); ++j) {
      SearchParams params = base;
      params.p = ps[i];
      params.q = qs[j];
      params.seed = derive_seed(base.seed, i, j);
      const SearchResult r = maximize(params);
      rows.push_back({params.p, params.q, r.best_ratio, params.seed, r.proposals});
    }
  }
  return rows;
}

}  // namespace mazurlab
