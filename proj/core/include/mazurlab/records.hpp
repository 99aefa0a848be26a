// CheckRecord: the uniform outcome of every inequality check.  One record
// per evaluated instance, carrying both sides of the inequality, the
// constant tested (or NaN for empirical constants), and enough digest
// (seed, dim, cell parameters) to replay the instance exactly.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace mazurlab {

enum class Lemma {
  power_contraction,       // |x^t - y^t|_p <= |x - y|_{tp}^t, constant 1
  power_expansion,         // |x^{1+t} - y^{1+t}|_p, constant 3
  alpha_lipschitz,         // |x^a - y^a|_p for a > 1, constant 3a
  commutator_up,           // |[x^t, b]|_{p/t}, constant 2^t
  commutator_down,         // |[x, b]|_p, constant 12/t
  anticommutator_up,       // |x^t b + b y^t|_{p/t}, empirical constant
  anticommutator_down,     // |x b + b y|_p, empirical constant
  jensen_chain,            // |x^t b + b x^t|_{1/t} <= 2 |xb + bx|_1^t
  selfadjoint_commutator,  // |[map(x), b]|_q vs |[x, b]|_p, empirical
  mazur_theorem,           // |map(x) - map(y)|_q vs |x - y|_p^t, empirical
  holder_product,          // |xyz|_p <= |x|_a |y|_b |z|_c, constant 1
};

const char* lemma_name(Lemma l);
// Throws ConfigError for unknown names.
Lemma lemma_from_name(const std::string& name);
// True for the checks whose constant is pinned (pass/fail is decidable).
bool lemma_has_explicit_constant(Lemma l);

enum class CheckStatus {
  pass,
  fail,
  skipped_degenerate,  // structural side too small to support a ratio
  error,               // the trial itself raised; see note
};

const char* status_name(CheckStatus s);

// Denominators below this are treated as degenerate for ratio purposes.
inline constexpr double kDegenerateRhs = 1e-14;

// Repo-wide inequality slack: lhs <= bound passes up to a relative-or-
// absolute cushion of 1e-8.
inline bool inequality_holds(double lhs, double bound) {
  return lhs <= bound + 1e-8 * std::fmax(1.0, bound);
}

struct CheckRecord {
  Lemma lemma = Lemma::power_contraction;
  CheckStatus status = CheckStatus::pass;
  int dim = 0;        // generating block dimension, 0 when not from a suite cell
  int trial = -1;     // trial index within its cell, -1 for direct calls
  uint64_t seed = 0;  // rng seed that regenerates the instance
  double p = nan_value();
  double q = nan_value();
  double theta = nan_value();
  double alpha = nan_value();
  double lhs = 0.0;
  double rhs_structural = 0.0;
  double constant = nan_value();  // NaN marks an empirical constant
  double ratio = nan_value();     // lhs / rhs_structural when defined
  std::string note;               // error text, empty otherwise

  static double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

  bool empirical() const { return std::isnan(constant); }

  // Fills ratio and status from lhs / rhs_structural / constant.
  //   explicit constant: pass iff lhs <= C * rhs + slack (degenerate rhs
  //     still decides, the absolute cushion covers 0 <= 0);
  //   empirical: ratio must stay under `cap`; degenerate rhs skips.
  void finalize(double cap);
};

}  // namespace mazurlab
