// One function per inequality under test.  Each takes a concrete instance,
// computes both sides, and returns a finalized CheckRecord; nothing here
// draws randomness.  run_trial() is the randomized entry point: it grows an
// instance from a seed according to the per-lemma generation plan and runs
// the matching check, so a recorded (cell, seed) pair replays exactly.
#pragma once

#include "mazurlab/records.hpp"
#include "mazurlab/rng.hpp"
#include "mazurlab/schatten.hpp"

namespace mazurlab {

// Ratio cap for empirical checks: a finite ratio above this is treated as
// a failure (a blown-up constant), below it as a data point.
inline constexpr double kDefaultRatioCap = 64.0;

// Pairs closer than this in the source norm give meaningless Hoelder
// ratios and are skipped.
inline constexpr double kClosePairTol = 1e-6;

// The four-term sign decomposition inside the selfadjoint commutator check
// must close to this tolerance (relative to the instance scale).
inline constexpr double kSignSplitTol = 1e-10;

// |x^t - y^t|_p <= |x - y|_{tp}^t for positive x, y and t in (0, 1].
CheckRecord check_power_contraction(const Element& x, const Element& y,
                                    double theta, double p);

// |x^{1+t} - y^{1+t}|_p <= 3 |x - y|_{(1+t)p} max(|x|, |y|)_{(1+t)p}^t.
CheckRecord check_power_expansion(const Element& x, const Element& y,
                                  double theta, double p);

// |x^a - y^a|_p <= 3a |x - y|_{ap} max(|x|, |y|)_{ap}^{a-1} for a > 1.
CheckRecord check_alpha_lipschitz(const Element& x, const Element& y,
                                  double alpha, double p);

// |[x^t, b]|_{p/t} <= 2^t |b|_inf^{1-t} |[x, b]|_p^t for positive x.
CheckRecord check_commutator_up(const Element& x, const Element& b,
                                double theta, double p);

// |[x, b]|_p <= (12/t) |x|_p^{1-t} |[x^t, b]|_{p/t}.
CheckRecord check_commutator_down(const Element& x, const Element& b,
                                  double theta, double p);

// |x^t b + b y^t|_{p/t} against |b|_inf^{1-t} |x b + b y|_p^t; the
// constant is an empirical ratio, not a theorem.
CheckRecord check_anticommutator_up(const Element& x, const Element& y,
                                    const Element& b, double theta, double p,
                                    double cap = kDefaultRatioCap);

// |x b + b y|_p against max(|x|_p, |y|_p)^{1-t} |x^t b + b y^t|_{p/t};
// empirical.
CheckRecord check_anticommutator_down(const Element& x, const Element& y,
                                      const Element& b, double theta, double p,
                                      double cap = kDefaultRatioCap);

// |x^t b + b x^t|_{1/t} <= 2 |x b + b x|_1^t for positive x, a contraction
// b and t in (0, 1/2].
CheckRecord check_jensen_chain(const Element& x, const Element& b, double theta);

// |[sign(x)|x|^{p/q}, b]|_q against the regime-dependent structural side;
// also verifies the four-way sign-projection splitting of the commutator.
CheckRecord check_selfadjoint_commutator(const Element& x, const Element& b,
                                         double p, double q,
                                         double cap = kDefaultRatioCap);

// |M_{p,q}(x) - M_{p,q}(y)|_q against |x - y|_p^{min(p/q,1)} on the unit
// ball; inputs are renormalized when within 1e-12 outside it, rejected
// beyond that, and pairs closer than kClosePairTol are skipped.
CheckRecord check_mazur_theorem(const Element& x, const Element& y,
                                double p, double q,
                                double cap = kDefaultRatioCap);

// |xyz|_p <= |x|_a |y|_b |z|_c; forwards to holder_bound.
CheckRecord check_holder_product(const Element& x, const Element& y,
                                 const Element& z, double p, double a,
                                 double b, double c);

// One suite cell: a lemma with fixed grid parameters.  Fields not used by
// the lemma stay NaN (or 0 for dim).
struct CellParams {
  Lemma lemma = Lemma::power_contraction;
  int dim = 1;
  double p = CheckRecord::nan_value();
  double q = CheckRecord::nan_value();
  double theta = CheckRecord::nan_value();
  double alpha = CheckRecord::nan_value();
  double cap = kDefaultRatioCap;
};

// Draws an instance for the cell's lemma from the seed and runs the check.
// Every random choice (shape layout, generation style, entries) comes from
// the seeded stream, so equal (cell, seed) means equal record.
CheckRecord run_trial(const CellParams& cell, uint64_t seed);

}  // namespace mazurlab
