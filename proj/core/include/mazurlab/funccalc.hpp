// Operator functional calculus.  Two deliberately independent routes to
// fractional powers coexist here:
//   - spectral: diagonalize and map eigenvalues (power_pos, signed_power);
//   - integral: the representation s^theta = c_theta int t^theta s(s+t)^{-1}
//     dt/t evaluated by quadrature over resolvents computed with Cholesky
//     solves, never touching the eigensolver for values.
// Cross-checking the two is one of the main verification devices of this
// project, so keep them independent.
//
// The derivative machinery implements, for f_t(s) = s^2 (s+t)^{-1},
//   D_s f_t (d) = d (s+t)^{-1} s + s (s+t)^{-1} d - s (s+t)^{-1} d (s+t)^{-1} s
// and the difference representation
//   x^{1+theta} - y^{1+theta}
//     = c_theta int_0^1 int_0^inf t^theta D_{y+u(x-y)} f_t (x-y) dt/t du,
// plus the square function
//   gamma^2 = c_theta int t^theta g_t(z)^2 dt/t,  g_t(z) = z (z+t)^{-1},
// which is dominated by z^theta (pointwise it equals (1-theta) z^theta).
#pragma once

#include "mazurlab/eig.hpp"
#include "mazurlab/quadrature.hpp"

namespace mazurlab {

// Eigenvalues of declared-positive inputs may dip this far (relative to the
// largest magnitude) below zero and are clamped to 0; anything lower raises
// NotPositiveError.
inline constexpr double kPsdClampRelTol = 1e-10;

// Integral-route inputs must be invertible: smallest eigenvalue at least
// this fraction of the largest magnitude, else IllConditionedError.
inline constexpr double kInvertibilityRelFloor = 1e-8;

// Normalization constant of the power integral: c_theta = sin(pi theta)/pi,
// theta in (0, 1).  The closed form; confirmed against the defining
// integral by c_theta_integral.
double c_theta(double theta);

// Quadrature of the defining integral (int_0^inf u^theta/(u(1+u)) du)^{-1}.
double c_theta_integral(double theta, const QuadratureScheme& scheme = {});

// x^alpha for positive semidefinite x, alpha > 0, via the spectral route.
// Applies the clamping rule above; 0^alpha = 0.
Element power_pos(const Element& x, double alpha);

// sign(x) |x|^alpha for self-adjoint x: odd functional calculus.
Element signed_power(const Element& x, double alpha);

// g_t(x) = x (x+t)^{-1} for positive semidefinite x, t > 0.  Cholesky
// route; a positive contraction commuting with x.
Element resolvent_map(const Element& x, double t);

// x^theta through the integral representation, theta in (0, 1).  Resolvent
// quadrature only; requires x positive invertible (see the floor above).
Element power_via_integral(const Element& x, double theta,
                           const QuadratureScheme& scheme = {});

// D_s f_t (delta) as displayed above; s positive invertible, t > 0, delta
// self-adjoint.
Element frechet_f_t(const Element& s, double t, const Element& delta);

// x^{1+theta} - y^{1+theta} via the double-quadrature difference
// representation; x, y positive invertible, theta in (0, 1).
Element power_diff_integral(const Element& x, const Element& y, double theta,
                            const QuadratureScheme& scheme = {});

// gamma^2 = c_theta int t^theta g_t(z)^2 dt/t for z positive invertible.
Element gamma_square(const Element& z, double theta, const QuadratureScheme& scheme = {});

}  // namespace mazurlab
