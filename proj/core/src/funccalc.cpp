#include "mazurlab/funccalc.hpp"

#include <cmath>
#include <string>

namespace mazurlab {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void require_theta_open(double theta, const char* who) {
  if (!(theta > 0.0) || !(theta < 1.0))
    throw DomainError(std::string(who) + ": theta must lie in (0, 1)");
}

void require_selfadjoint(const Element& x, const char* who) {
  x.validate();
  if (hermiticity_defect(x) > kHermTol * std::max(1.0, max_abs(x)))
    throw NotHermitianError(std::string(who) + ": input is not self-adjoint");
}

// Shared validation for declared-positive spectral input: returns the
// decomposition with the clamp rule applied to its eigenvalues.
SpectralDecomposition psd_eig(const Element& x, const char* who) {
  SpectralDecomposition d = hermitian_eig(x);
  const double scale = d.max_abs_value();
  const double clamp_band = kPsdClampRelTol * scale;
  for (auto& bv : d.values)
    for (double& v : bv) {
      if (v < -clamp_band)
        throw NotPositiveError(std::string(who) + ": eigenvalue " + std::to_string(v) +
                               " below the positivity clamp band");
      if (v < 0.0) v = 0.0;
    }
  return d;
}

// Gate for the integral (resolvent) routes: positive and invertible at the
// relative floor.  The eigensolver is used only for this yes/no check;
// values produced by the routes flow through Cholesky solves alone.
void require_positive_invertible(const Element& x, const char* who) {
  require_selfadjoint(x, who);
  const auto vals = hermitian_eigenvalues(x);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& bv : vals)
    for (double v : bv) {
      lo = std::min(lo, v);
      hi = std::max(hi, std::abs(v));
    }
  if (lo < -kPsdClampRelTol * hi)
    throw NotPositiveError(std::string(who) + ": input has a negative eigenvalue");
  if (!(lo >= kInvertibilityRelFloor * hi) || hi == 0.0)
    throw IllConditionedError(std::string(who) +
                              ": input not invertible at the relative floor 1e-8");
}

// x (x+t)^{-1} as an explicit product.  The product form keeps the result
// relatively accurate deep in the tails (entries ~ |x|/t), which the
// t^theta weight of the wide quadrature window amplifies; the algebraically
// equal form I - t (x+t)^{-1} loses exactly that accuracy.
Element resolvent_product(const Element& x, double t) {
  Element r(x.shape);
  for (size_t k = 0; k < x.blocks.size(); ++k) {
    Mat shifted = x.blocks[k];
    for (int i = 0; i < shifted.n; ++i) shifted.at(i, i) += t;
    r.blocks[k] = symmetrize(x.blocks[k] * cholesky_inverse(shifted));
  }
  return r;
}

}  // namespace

double c_theta(double theta) {
  require_theta_open(theta, "c_theta");
  return std::sin(kPi * theta) / kPi;
}

double c_theta_integral(double theta, const QuadratureScheme& scheme) {
  require_theta_open(theta, "c_theta_integral");
  const double integral =
      integrate_log_scalar(scheme, theta, [](double t) { return 1.0 / (1.0 + t); });
  return 1.0 / integral;
}

Element power_pos(const Element& x, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("power_pos: alpha must be > 0");
  const SpectralDecomposition d = psd_eig(x, "power_pos");
  return d.apply([alpha](double t) { return std::pow(t, alpha); });
}

Element signed_power(const Element& x, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("signed_power: alpha must be > 0");
  const SpectralDecomposition d = hermitian_eig(x);
  return d.apply([alpha](double t) {
    const double m = std::pow(std::abs(t), alpha);
    return t < 0.0 ? -m : (t > 0.0 ? m : 0.0);
  });
}

Element resolvent_map(const Element& x, double t) {
  if (!(t > 0.0)) throw DomainError("resolvent_map: t must be > 0");
  require_selfadjoint(x, "resolvent_map");
  return resolvent_product(symmetrize(x), t);
}

Element power_via_integral(const Element& x, double theta, const QuadratureScheme& scheme) {
  require_theta_open(theta, "power_via_integral");
  require_positive_invertible(x, "power_via_integral");
  const Element xs = symmetrize(x);
  Element acc(x.shape);
  for_each_log_node(scheme, [&](double v, double w) {
    const double coeff = w * std::exp(theta * v);
    acc = acc + cplx(coeff, 0.0) * resolvent_product(xs, std::exp(v));
  });
  return symmetrize(cplx(c_theta(theta), 0.0) * acc);
}

Element frechet_f_t(const Element& s, double t, const Element& delta) {
  if (!(t > 0.0)) throw DomainError("frechet_f_t: t must be > 0");
  require_positive_invertible(s, "frechet_f_t");
  require_selfadjoint(delta, "frechet_f_t (direction)");
  require_same_shape(s, delta);
  // k = s (s+t)^{-1} = (s+t)^{-1} s: the two factors commute, so one
  // Hermitian product serves both sides of the displayed derivative.
  const Element k = resolvent_product(symmetrize(s), t);
  return symmetrize(delta * k + k * delta - k * delta * k);
}

Element power_diff_integral(const Element& x, const Element& y, double theta,
                            const QuadratureScheme& scheme) {
  require_theta_open(theta, "power_diff_integral");
  require_positive_invertible(x, "power_diff_integral");
  require_positive_invertible(y, "power_diff_integral");
  require_same_shape(x, y);
  scheme.validate();

  const Element xs = symmetrize(x), ys = symmetrize(y);
  const Element delta = xs - ys;
  Element acc(x.shape);
  const double hu = 1.0 / (scheme.u_nodes - 1);
  for (int iu = 0; iu < scheme.u_nodes; ++iu) {
    const double u = iu * hu;
    const double wu = (iu == 0 || iu == scheme.u_nodes - 1) ? 0.5 * hu : hu;
    const Element s = ys + cplx(u, 0.0) * delta;
    for_each_log_node(scheme, [&](double v, double w) {
      const Element k = resolvent_product(s, std::exp(v));
      const Element d = delta * k + k * delta - k * delta * k;
      acc = acc + cplx(wu * w * std::exp(theta * v), 0.0) * d;
    });
  }
  return symmetrize(cplx(c_theta(theta), 0.0) * acc);
}

Element gamma_square(const Element& z, double theta, const QuadratureScheme& scheme) {
  require_theta_open(theta, "gamma_square");
  require_positive_invertible(z, "gamma_square");
  const Element zs = symmetrize(z);
  Element acc(z.shape);
  for_each_log_node(scheme, [&](double v, double w) {
    const Element g = resolvent_product(zs, std::exp(v));
    acc = acc + cplx(w * std::exp(theta * v), 0.0) * (g * g);
  });
  return symmetrize(cplx(c_theta(theta), 0.0) * acc);
}

}  // namespace mazurlab
