// Schur multipliers in a spectral basis and averaged conjugations.
//
// A Multiplier is a block unitary basis (eigenvectors of a positive
// reference element) together with one real scalar matrix per block;
// applying it conjugates the argument into the basis, multiplies
// entrywise, and conjugates back.  The two families built here are the
// ones the commutator estimates run on:
//   - mean-power: m_ij = (l_i^a l_j^{1-a} + l_i^{1-a} l_j^a)/(l_i + l_j),
//     positive semidefinite with unit diagonal, hence a complete
//     contraction on every S_p;
//   - geometric: m_ij = sqrt(m_i m_j)/(m_i + m_j), positive semidefinite
//     with diagonal exactly 1/2; it halves anticommutators into
//     sqrt(x) b sqrt(x).
//
// averaged_conjugation evaluates sum_j w_j v_j a v_j for self-adjoint
// factors v_j with sum_j w_j v_j^2 = 1; such averages never increase any
// S_p norm.  resolvent_family builds the canonical such family from the
// resolvents g_t(z) normalized by the square function gamma.
#pragma once

#include <vector>

#include "mazurlab/funccalc.hpp"

namespace mazurlab {

// Entrywise multiplier matrix for the two-sided power mean against the
// arithmetic mean.  lambdas must be strictly positive, alpha in [0, 1];
// diagonal entries are set to exactly 1.
Mat mean_power_matrix(const std::vector<double>& lambdas, double alpha);

// Entrywise multiplier matrix sqrt(m_i m_j)/(m_i + m_j); mus strictly
// positive, diagonal exactly 1/2.
Mat geometric_matrix(const std::vector<double>& mus);

struct Multiplier {
  AlgebraShape shape;
  std::vector<Mat> basis;    // unitary per block
  std::vector<Mat> scalars;  // real symmetric per block
};

// Builds the mean-power multiplier in the eigenbasis of a positive
// definite reference element.  Throws DomainError when the reference has
// a nonpositive eigenvalue or alpha lies outside [0, 1].
Multiplier multiplier_mean_power(const Element& reference, double alpha);

// Same for the geometric multiplier.
Multiplier multiplier_geometric(const Element& reference);

// v (m o (v* a v)) v* blockwise, with o the entrywise product.
Element schur_apply(const Multiplier& m, const Element& a);

// sum_j weights_j v_j a v_j.  Every factor must be self-adjoint (within
// the usual tolerance) and the family normalized: max entry of
// sum_j w_j v_j^2 - 1 at most kConjugationNormTol, else
// NotNormalizedError.  Weights must be finite and >= 0.
inline constexpr double kConjugationNormTol = 1e-6;

Element averaged_conjugation(const std::vector<Element>& factors,
                             const std::vector<double>& weights,
                             const Element& a);

struct ConjugationFamily {
  std::vector<Element> factors;
  std::vector<double> weights;
};

// The family v_t = g_t(z) gamma^{-1} with weights from the quadrature of
// c_theta t^theta dt/t, where gamma^2 = c_theta int t^theta g_t(z)^2 dt/t
// is evaluated with the same scheme, so the normalization holds to
// rounding.  z must be positive invertible.
ConjugationFamily resolvent_family(const Element& z, double theta,
                                   const QuadratureScheme& scheme = {});

}  // namespace mazurlab
