// Inequality checks and the seeded trial generator.
#include "mazurlab/checks.hpp"

#include <cmath>

#include "mazurlab/funccalc.hpp"
#include "mazurlab/mazur.hpp"
#include "mazurlab/random_elements.hpp"

namespace mazurlab {

namespace {

void require_theta(double theta, double hi) {
  if (!(theta > 0.0) || theta > hi + 1e-12)
    throw DomainError("theta out of range");
}

void require_p(double p) {
  if (!std::isfinite(p) || p < 1.0) throw DomainError("norm index p must be >= 1");
}

double norm_max(const Element& x, const Element& y, PNorm p) {
  return std::fmax(schatten_norm(x, p), schatten_norm(y, p));
}

}  // namespace

CheckRecord check_power_contraction(const Element& x, const Element& y,
                                    double theta, double p) {
  require_theta(theta, 1.0);
  require_p(p);
  CheckRecord rec;
  rec.lemma = Lemma::power_contraction;
  rec.p = p;
  rec.theta = theta;
  rec.constant = 1.0;
  rec.lhs = schatten_norm(power_pos(x, theta) - power_pos(y, theta), PNorm(p));
  rec.rhs_structural = std::pow(sigma_moment(x - y, theta * p), theta);
  rec.finalize(kDefaultRatioCap);
  return rec;
}

CheckRecord check_power_expansion(const Element& x, const Element& y,
                                  double theta, double p) {
  require_theta(theta, 1.0);
  require_p(p);
  CheckRecord rec;
  rec.lemma = Lemma::power_expansion;
  rec.p = p;
  rec.theta = theta;
  rec.constant = 3.0;
  const PNorm stretched((1.0 + theta) * p);
  rec.lhs = schatten_norm(power_pos(x, 1.0 + theta) - power_pos(y, 1.0 + theta),
                          PNorm(p));
  rec.rhs_structural = schatten_norm(x - y, stretched) *
                       std::pow(norm_max(x, y, stretched), theta);
  rec.finalize(kDefaultRatioCap);
  return rec;
}

CheckRecord check_alpha_lipschitz(const Element& x, const Element& y,
                                  double alpha, double p) {
  if (!(alpha > 1.0)) throw DomainError("alpha must be > 1");
  require_p(p);
  CheckRecord rec;
  rec.lemma = Lemma::alpha_lipschitz;
  rec.p = p;
  rec.alpha = alpha;
  rec.constant = 3.0 * alpha;
  const PNorm stretched(alpha * p);
  rec.lhs = schatten_norm(power_pos(x, alpha) - power_pos(y, alpha), PNorm(p));
  rec.rhs_structural = schatten_norm(x - y, stretched) *
                       std::pow(norm_max(x, y, stretched), alpha - 1.0);
  rec.finalize(kDefaultRatioCap);
  return rec;
}

CheckRecord check_commutator_up(const Element& x, const Element& b,
                                double theta, double p) {
  require_theta(theta, 1.0);
  require_p(p);
  CheckRecord rec;
  rec.lemma = Lemma::commutator_up;
  rec.p = p;
  rec.theta = theta;
  rec.constant = std::pow(2.0, theta);
  rec.lhs = schatten_norm(commutator(power_pos(x, theta), b), PNorm(p / theta));
  rec.rhs_structural = std::pow(schatten_norm(b, PNorm::inf()), 1.0 - theta) *
                       std::pow(schatten_norm(commutator(x, b), PNorm(p)), theta);
  rec.finalize(kDefaultRatioCap);
  return rec;
}

CheckRecord check_commutator_down(const Element& x, const Element& b,
                                  double theta, double p) {
  require_theta(theta, 1.0);
  require_p(p);
  CheckRecord rec;
  rec.lemma = Lemma::commutator_down;
  rec.p = p;
  rec.theta = theta;
  rec.constant = 12.0 / theta;
  rec.lhs = schatten_norm(commutator(x, b), PNorm(p));
  rec.rhs_structural =
      std::pow(schatten_norm(x, PNorm(p)), 1.0 - theta) *
      schatten_norm(commutator(power_pos(x, theta), b), PNorm(p / theta));
  rec.finalize(kDefaultRatioCap);
  return rec;
}

CheckRecord check_anticommutator_up(const Element& x, const Element& y,
                                    const Element& b, double theta, double p,
                                    double cap) {
  require_theta(theta, 1.0);
  require_p(p);
  CheckRecord rec;
  rec.lemma = Lemma::anticommutator_up;
  rec.p = p;
  rec.theta = theta;
  rec.lhs = schatten_norm(power_pos(x, theta) * b + b * power_pos(y, theta),
                          PNorm(p / theta));
  rec.rhs_structural = std::pow(schatten_norm(b, PNorm::inf()), 1.0 - theta) *
                       std::pow(schatten_norm(x * b + b * y, PNorm(p)), theta);
  rec.finalize(cap);
  return rec;
}

CheckRecord check_anticommutator_down(const Element& x, const Element& y,
                                      const Element& b, double theta, double p,
                                      double cap) {
  require_theta(theta, 1.0);
  require_p(p);
  CheckRecord rec;
  rec.lemma = Lemma::anticommutator_down;
  rec.p = p;
  rec.theta = theta;
  rec.lhs = schatten_norm(x * b + b * y, PNorm(p));
  rec.rhs_structural =
      std::pow(norm_max(x, y, PNorm(p)), 1.0 - theta) *
      schatten_norm(power_pos(x, theta) * b + b * power_pos(y, theta),
                    PNorm(p / theta));
  rec.finalize(cap);
  return rec;
}

CheckRecord check_jensen_chain(const Element& x, const Element& b, double theta) {
  require_theta(theta, 0.5);
  if (schatten_norm(b, PNorm::inf()) > 1.0 + 1e-9)
    throw DomainError("jensen chain needs a contraction b");
  CheckRecord rec;
  rec.lemma = Lemma::jensen_chain;
  rec.p = 1.0;
  rec.theta = theta;
  rec.constant = 2.0;
  const Element xt = power_pos(x, theta);
  rec.lhs = schatten_norm(xt * b + b * xt, PNorm(1.0 / theta));
  rec.rhs_structural =
      std::pow(schatten_norm(x * b + b * x, PNorm(1.0)), theta);
  rec.finalize(kDefaultRatioCap);
  return rec;
}

CheckRecord check_selfadjoint_commutator(const Element& x, const Element& b,
                                         double p, double q, double cap) {
  require_p(p);
  require_p(q);
  CheckRecord rec;
  rec.lemma = Lemma::selfadjoint_commutator;
  rec.p = p;
  rec.q = q;
  const double r = p / q;
  if (p == q) {
    rec.lhs = rec.rhs_structural = schatten_norm(commutator(x, b), PNorm(p));
    rec.finalize(cap);
    return rec;
  }
  const Element mapped = signed_power(x, r);
  rec.lhs = schatten_norm(commutator(mapped, b), PNorm(q));
  if (q > p) {
    rec.rhs_structural =
        std::pow(schatten_norm(b, PNorm::inf()), 1.0 - r) *
        std::pow(schatten_norm(commutator(x, b), PNorm(p)), r);
  } else {
    rec.rhs_structural = r * std::pow(schatten_norm(x, PNorm(p)), r - 1.0) *
                         schatten_norm(commutator(x, b), PNorm(p));
  }
  rec.finalize(cap);

  // The commutator must split over the sign projections of x into two
  // commutator and two anticommutator terms.
  const SignParts parts = pos_neg_parts(x);
  const Element xp = power_pos(parts.plus, r);
  const Element xm = power_pos(parts.minus, r);
  const Element bpp = parts.proj_plus * b * parts.proj_plus;
  const Element bmm = parts.proj_minus * b * parts.proj_minus;
  const Element bpm = parts.proj_plus * b * parts.proj_minus;
  const Element bmp = parts.proj_minus * b * parts.proj_plus;
  const Element rebuilt = commutator(xp, bpp) - commutator(xm, bmm) +
                          (xp * bpm + bpm * xm) - (xm * bmp + bmp * xp);
  const double defect = max_abs(commutator(mapped, b) - rebuilt);
  const double scale = std::fmax(1.0, max_abs(mapped) * max_abs(b));
  if (defect > kSignSplitTol * scale) {
    rec.status = CheckStatus::error;
    rec.note = "sign decomposition defect " + std::to_string(defect);
  }
  return rec;
}

CheckRecord check_mazur_theorem(const Element& x, const Element& y,
                                double p, double q, double cap) {
  const MazurParams params(p, q);
  CheckRecord rec;
  rec.lemma = Lemma::mazur_theorem;
  rec.p = p;
  rec.q = q;
  rec.theta = params.theta();
  const PNorm pn(p);
  Element xs = x, ys = y;
  for (Element* e : {&xs, &ys}) {
    const double n = schatten_norm(*e, pn);
    if (n > 1.0 + 1e-12)
      throw DomainError("mazur theorem input lies outside the unit ball");
    if (n > 1.0) *e = cplx(1.0 / n, 0.0) * *e;
  }
  const double dist = schatten_norm(xs - ys, pn);
  rec.lhs = schatten_norm(mazur_map(xs, params) - mazur_map(ys, params), PNorm(q));
  rec.rhs_structural = std::pow(dist, params.theta());
  if (dist < kClosePairTol) {
    rec.status = CheckStatus::skipped_degenerate;
    rec.ratio = CheckRecord::nan_value();
    return rec;
  }
  rec.finalize(cap);
  return rec;
}

CheckRecord check_holder_product(const Element& x, const Element& y,
                                 const Element& z, double p, double a,
                                 double b, double c) {
  return holder_bound(x, y, z, PNorm(p), PNorm(a), PNorm(b), PNorm(c));
}

// ---- Seeded instance generation ----

namespace {

// Shape for a cell of generating dimension d: either one block of weight 1
// or that block plus a smaller companion, both with log-uniform weights.
AlgebraShape draw_shape(int dim, Rng& rng) {
  if (rng.uniform01() < 0.5) return AlgebraShape::simple(dim);
  const int side = dim > 1 ? dim - 1 : 1;
  const double w1 = rng.log_uniform(0.1, 10.0);
  const double w2 = rng.log_uniform(0.1, 10.0);
  return AlgebraShape{{dim, w1}, {side, w2}};
}

// Positive pair in one of three styles: independent draws, a small
// positive bump, or a clamped self-adjoint perturbation.
void draw_positive_pair(const AlgebraShape& shape, Rng& rng, Element& x,
                        Element& y) {
  x = random_positive(shape, rng, 0.01, 10.0);
  const double style = rng.uniform01();
  if (style < 1.0 / 3.0) {
    y = random_positive(shape, rng, 0.01, 10.0);
  } else if (style < 2.0 / 3.0) {
    const double eps = rng.log_uniform(1e-6, 1e-1);
    y = x + cplx(eps, 0.0) * random_positive(shape, rng, 0.01, 10.0);
  } else {
    const double eps = rng.log_uniform(1e-4, 1.0);
    const Element bump = symmetrize(random_gaussian(shape, rng));
    y = pos_neg_parts(x + cplx(eps, 0.0) * bump).plus;
  }
}

Element draw_ball_point(const AlgebraShape& shape, Rng& rng, PNorm p) {
  Element x = random_gaussian(shape, rng);
  const double n = schatten_norm(x, p);
  if (n < 1e-12) return Element(shape);
  const double radius = rng.uniform01() < 0.5 ? 1.0 : rng.uniform01();
  return cplx(radius / n, 0.0) * x;
}

}  // namespace

CheckRecord run_trial(const CellParams& cell, uint64_t seed) {
  Rng rng(seed);
  const AlgebraShape shape = draw_shape(cell.dim, rng);
  CheckRecord rec;
  switch (cell.lemma) {
    case Lemma::power_contraction: {
      Element x, y;
      draw_positive_pair(shape, rng, x, y);
      rec = check_power_contraction(x, y, cell.theta, cell.p);
      break;
    }
    case Lemma::power_expansion: {
      Element x, y;
      draw_positive_pair(shape, rng, x, y);
      rec = check_power_expansion(x, y, cell.theta, cell.p);
      break;
    }
    case Lemma::alpha_lipschitz: {
      Element x, y;
      draw_positive_pair(shape, rng, x, y);
      rec = check_alpha_lipschitz(x, y, cell.alpha, cell.p);
      break;
    }
    case Lemma::commutator_up: {
      const Element x = random_positive(shape, rng, 0.01, 10.0);
      const Element b = random_contraction(shape, rng);
      rec = check_commutator_up(x, b, cell.theta, cell.p);
      break;
    }
    case Lemma::commutator_down: {
      const Element x = random_positive(shape, rng, 0.01, 10.0);
      const Element b = random_contraction(shape, rng);
      rec = check_commutator_down(x, b, cell.theta, cell.p);
      break;
    }
    case Lemma::anticommutator_up: {
      Element x, y;
      draw_positive_pair(shape, rng, x, y);
      const Element b = random_contraction(shape, rng);
      rec = check_anticommutator_up(x, y, b, cell.theta, cell.p, cell.cap);
      break;
    }
    case Lemma::anticommutator_down: {
      Element x, y;
      draw_positive_pair(shape, rng, x, y);
      const Element b = random_contraction(shape, rng);
      rec = check_anticommutator_down(x, y, b, cell.theta, cell.p, cell.cap);
      break;
    }
    case Lemma::jensen_chain: {
      const Element x = random_positive(shape, rng, 0.01, 10.0);
      const Element b = random_contraction(shape, rng);
      rec = check_jensen_chain(x, b, cell.theta);
      break;
    }
    case Lemma::selfadjoint_commutator: {
      const Element x = random_selfadjoint_spread(shape, rng, 0.01, 10.0);
      const Element b = random_contraction(shape, rng);
      rec = check_selfadjoint_commutator(x, b, cell.p, cell.q, cell.cap);
      break;
    }
    case Lemma::mazur_theorem: {
      const PNorm pn(cell.p);
      const Element x = draw_ball_point(shape, rng, pn);
      const Element y = draw_ball_point(shape, rng, pn);
      rec = check_mazur_theorem(x, y, cell.p, cell.q, cell.cap);
      break;
    }
    case Lemma::holder_product: {
      const Element x = random_gaussian(shape, rng);
      const Element y = random_gaussian(shape, rng);
      const Element z = random_gaussian(shape, rng);
      double f1 = rng.uniform_pos(), f2 = rng.uniform_pos(), f3 = rng.uniform_pos();
      const double total = f1 + f2 + f3;
      const double a = cell.p * total / f1;
      const double b = cell.p * total / f2;
      const double c = cell.p * total / f3;
      rec = check_holder_product(x, y, z, cell.p, a, b, c);
      break;
    }
  }
  rec.dim = cell.dim;
  rec.seed = seed;
  return rec;
}

}  // namespace mazurlab
