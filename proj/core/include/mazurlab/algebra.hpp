// Dense complex block matrices over a finite-dimensional algebra with a
// weighted trace.  An AlgebraShape is a list of (dim, weight) blocks; the
// trace of an element is sum_k weight_k * tr(block_k).  A single block of
// weight 1 recovers plain matrices with the usual trace.
//
// Elements are value types: every operation returns a fresh element and
// never mutates its arguments.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mazurlab/errors.hpp"

namespace mazurlab {

using cplx = std::complex<double>;

// ---- Single dense square matrix ----

struct Mat {
  int n = 0;
  std::vector<cplx> a;  // row-major, n*n entries

  Mat() = default;
  explicit Mat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}

  cplx& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const cplx& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Mat identity(int dim);
  static Mat zero(int dim) { return Mat(dim); }
};

Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Mat& x, const Mat& y);
Mat operator*(cplx s, const Mat& x);
Mat adjoint(const Mat& x);

// Largest entry magnitude; zero matrix gives 0.
double max_abs(const Mat& x);
// max_ij |x_ij - conj(x_ji)|, the distance from being Hermitian.
double hermiticity_defect(const Mat& x);
// (x + x*)/2, exactly Hermitian in floating point.
Mat symmetrize(const Mat& x);
cplx mat_trace(const Mat& x);

// Cholesky factorization x = L L* for Hermitian positive definite x.
// Returns false (leaving `lower` unspecified) when a pivot drops below
// pivot_floor, which signals that x is not definite at working precision.
bool cholesky_factor(const Mat& x, Mat& lower, double pivot_floor);

// Inverse of a Hermitian positive definite matrix via its Cholesky factor.
// Throws IllConditionedError when factorization fails.  Result is
// symmetrized.
Mat cholesky_inverse(const Mat& x);

// ---- Algebra shape ----

struct AlgebraBlock {
  int dim = 0;
  double weight = 1.0;
  bool operator==(const AlgebraBlock&) const = default;
};

struct AlgebraShape {
  std::vector<AlgebraBlock> blocks;

  AlgebraShape() = default;
  AlgebraShape(std::initializer_list<AlgebraBlock> bs) : blocks(bs) { validate(); }
  explicit AlgebraShape(std::vector<AlgebraBlock> bs) : blocks(std::move(bs)) { validate(); }
  // Single block of the given dimension with weight 1 (plain matrices).
  static AlgebraShape simple(int dim) { return AlgebraShape{{dim, 1.0}}; }

  // Throws DomainError unless there is at least one block, every dim >= 1
  // and every weight is finite and > 0.
  void validate() const;

  size_t block_count() const { return blocks.size(); }
  double total_weight() const;
  int max_dim() const;
  // Shape with every block dimension doubled, weights kept.  Used by the
  // 2x2 dilation constructions.
  AlgebraShape doubled() const;
  bool operator==(const AlgebraShape&) const = default;
};

// ---- Element of the algebra ----

struct Element {
  AlgebraShape shape;
  std::vector<Mat> blocks;

  Element() = default;
  // Zero element of the given shape.
  explicit Element(const AlgebraShape& s);
  Element(const AlgebraShape& s, std::vector<Mat> bs);

  static Element identity(const AlgebraShape& s);

  // Throws DomainError if any entry is non-finite, ShapeMismatchError if
  // block dimensions disagree with the shape.
  void validate() const;
};

// Throws ShapeMismatchError unless x and y share a shape.
void require_same_shape(const Element& x, const Element& y);

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator*(const Element& x, const Element& y);
Element operator*(cplx s, const Element& x);
Element adjoint(const Element& x);
Element symmetrize(const Element& x);

double max_abs(const Element& x);
double hermiticity_defect(const Element& x);

// xy - yx and xy + yx.
Element commutator(const Element& x, const Element& y);
Element anticommutator(const Element& x, const Element& y);

}  // namespace mazurlab
