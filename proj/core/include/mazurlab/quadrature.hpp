// Quadrature for integrals of the form  int_0^inf f(t) t^theta dt/t.
// Log substitution t = e^v turns them into integrals over the line whose
// integrands decay like e^{theta v} (v -> -inf) and e^{(theta-1) v}
// (v -> +inf); a wide symmetric window with a composite trapezoid rule then
// converges geometrically (the integrand is analytic in a strip of height
// pi around the real axis).
//
// Default window [-500, 500] with 2000 nodes: truncation stays below 1e-9
// across theta in [0.05, 0.95] and the step ~0.5 puts discretization error
// near 1e-17.  exp(+-500) is comfortably inside double range; the window is
// capped at 700 where exp overflows.
#pragma once

#include <functional>

#include "mazurlab/errors.hpp"

namespace mazurlab {

struct QuadratureScheme {
  double half_width = 500.0;  // window [-L, L] in v = log t
  int nodes = 2000;           // trapezoid nodes, endpoints included
  int u_nodes = 64;           // trapezoid nodes on [0, 1] for double integrals

  void validate() const {
    if (!(half_width > 0.0) || half_width > 700.0)
      throw DomainError("quadrature half_width must lie in (0, 700]");
    if (nodes < 2) throw DomainError("quadrature needs at least 2 nodes");
    if (u_nodes < 2) throw DomainError("quadrature needs at least 2 u-nodes");
  }

  double step() const { return 2.0 * half_width / (nodes - 1); }
};

// Visits the trapezoid nodes v_j of the window left to right (so the
// summation order is fixed) with their bare weights; callers supply the
// e^{theta v} factor and evaluate integrands at t = e^v.
inline void for_each_log_node(const QuadratureScheme& scheme,
                              const std::function<void(double v, double weight)>& visit) {
  scheme.validate();
  const double h = scheme.step();
  for (int j = 0; j < scheme.nodes; ++j) {
    const double v = -scheme.half_width + h * j;
    const double w = (j == 0 || j == scheme.nodes - 1) ? 0.5 * h : h;
    visit(v, w);
  }
}

// Trapezoid integral of a scalar function of t against t^theta dt/t.
double integrate_log_scalar(const QuadratureScheme& scheme, double theta,
                            const std::function<double(double t)>& f);

}  // namespace mazurlab
