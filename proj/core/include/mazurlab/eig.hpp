// Spectral machinery: Hermitian eigendecomposition by cyclic Jacobi
// rotations, singular value decomposition through the Hermitian dilation
// [[0, x], [x*, 0]], polar decomposition, and positive/negative parts.
//
// Everything downstream (norms, operator powers, the map under study) sits
// on these routines, so their contracts are deliberately tight:
//   - eigenvalues come back sorted ascending per block,
//   - bases are unitary to ~1e-12,
//   - reconstruction errors stay below ~1e-12 * max|entry|.
#pragma once

#include <functional>
#include <vector>

#include "mazurlab/algebra.hpp"

namespace mazurlab {

// Jacobi sweep budget; exceeding it raises NoConvergenceError.  Generous:
// the dimensions in play (<= ~64 after dilation) converge in well under 20
// sweeps.
inline constexpr int kJacobiMaxSweeps = 100;

// Hermiticity tolerance for inputs declared self-adjoint.
inline constexpr double kHermTol = 1e-10;

// Singular values at or below kSupportRelTol * sigma_max count as numerical
// rank deficiency: their isometry columns are zeroed.
inline constexpr double kSupportRelTol = 1e-13;

struct SpectralDecomposition {
  AlgebraShape shape;
  std::vector<std::vector<double>> values;  // ascending per block
  std::vector<Mat> basis;                   // unitary, columns are eigenvectors

  // Element with blocks V f(Lambda) V*, symmetrized so results of real
  // functions are exactly Hermitian.
  Element apply(const std::function<double(double)>& f) const;
  // Same, for complex-valued spectral functions; the result is normal, not
  // Hermitian, so no symmetrization happens.
  Element apply_complex(const std::function<cplx(double)>& f) const;
  Element reconstruct() const;
  double min_value() const;
  double max_abs_value() const;
};

// Eigendecomposition of a self-adjoint element.  Throws NotHermitianError
// when the defect exceeds kHermTol * max(1, max|entry|), NoConvergenceError
// on sweep budget exhaustion.
SpectralDecomposition hermitian_eig(const Element& x);

// Eigenvalues only (ascending per block); same preconditions.
std::vector<std::vector<double>> hermitian_eigenvalues(const Element& x);

struct SingularDecomposition {
  AlgebraShape shape;
  std::vector<std::vector<double>> sigma;  // descending per block, >= 0
  std::vector<Mat> u_cols;                 // left vectors; zero columns off support
  std::vector<Mat> v_cols;                 // right vectors; zero columns off support
  std::vector<std::vector<char>> on_support;
  double sigma_max = 0.0;  // over all blocks

  // Sum of sigma_i^r u_i v_i* over the support.  r may be any real power;
  // off-support directions contribute nothing.
  Element apply_power(double r) const;
  // u = sum u_i v_i*, a partial isometry with u*u the support projection.
  Element isometry() const;
  // |x| = sum sigma_i v_i v_i*, positive semidefinite.
  Element modulus() const;
};

// SVD of a general element via the Hermitian dilation of each block.  This
// route is backward stable in x itself, so true zero singular values come
// out at the eps * sigma_max noise floor, cleanly below the support cut.
SingularDecomposition svd(const Element& x);

// Singular values only, descending per block.  Detects (anti-)Hermitian
// blocks and uses the plain eigensolver on them, falling back to the
// dilation otherwise.
std::vector<std::vector<double>> singular_values(const Element& x);

struct PolarDecomposition {
  Element isometry;  // u with u*u = support projection
  Element modulus;   // |x| positive semidefinite
};

// x = u |x| with u a partial isometry supported on the range of |x|.
PolarDecomposition polar(const Element& x);

struct SignParts {
  Element plus;   // x_+
  Element minus;  // x_-
  Element proj_plus;   // spectral projection onto [0, inf)
  Element proj_minus;  // spectral projection onto (-inf, 0)
};

// Jordan decomposition x = x_+ - x_- of a self-adjoint element together
// with the two spectral projections (e_+ absorbs the kernel).
SignParts pos_neg_parts(const Element& x);

}  // namespace mazurlab
