#include "mazurlab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mazurlab {

// ---- Mat ----

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

static void require_same_dim(const Mat& x, const Mat& y) {
  if (x.n != y.n)
    throw ShapeMismatchError("matrix dimensions disagree: " + std::to_string(x.n) + " vs " +
                             std::to_string(y.n));
}

Mat operator+(const Mat& x, const Mat& y) {
  require_same_dim(x, y);
  Mat r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat operator-(const Mat& x, const Mat& y) {
  require_same_dim(x, y);
  Mat r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat operator*(const Mat& x, const Mat& y) {
  require_same_dim(x, y);
  const int n = x.n;
  Mat r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx xik = x.at(i, k);
      if (xik == cplx(0.0)) continue;
      const cplx* yrow = &y.a[static_cast<size_t>(k) * n];
      cplx* rrow = &r.a[static_cast<size_t>(i) * n];
      for (int j = 0; j < n; ++j) rrow[j] += xik * yrow[j];
    }
  }
  return r;
}

Mat operator*(cplx s, const Mat& x) {
  Mat r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = s * x.a[i];
  return r;
}

Mat adjoint(const Mat& x) {
  Mat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r.at(i, j) = std::conj(x.at(j, i));
  return r;
}

double max_abs(const Mat& x) {
  double m = 0.0;
  for (const cplx& v : x.a) m = std::max(m, std::abs(v));
  return m;
}

double hermiticity_defect(const Mat& x) {
  double d = 0.0;
  for (int i = 0; i < x.n; ++i)
    for (int j = i; j < x.n; ++j)
      d = std::max(d, std::abs(x.at(i, j) - std::conj(x.at(j, i))));
  return d;
}

Mat symmetrize(const Mat& x) {
  Mat r(x.n);
  for (int i = 0; i < x.n; ++i) {
    r.at(i, i) = cplx(x.at(i, i).real(), 0.0);
    for (int j = i + 1; j < x.n; ++j) {
      const cplx v = 0.5 * (x.at(i, j) + std::conj(x.at(j, i)));
      r.at(i, j) = v;
      r.at(j, i) = std::conj(v);
    }
  }
  return r;
}

cplx mat_trace(const Mat& x) {
  cplx t = 0.0;
  for (int i = 0; i < x.n; ++i) t += x.at(i, i);
  return t;
}

bool cholesky_factor(const Mat& x, Mat& lower, double pivot_floor) {
  const int n = x.n;
  lower = Mat(n);
  for (int j = 0; j < n; ++j) {
    double d = x.at(j, j).real();
    for (int k = 0; k < j; ++k) d -= std::norm(lower.at(j, k));
    if (!(d > pivot_floor)) return false;
    const double ljj = std::sqrt(d);
    lower.at(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      cplx s = x.at(i, j);
      for (int k = 0; k < j; ++k) s -= lower.at(i, k) * std::conj(lower.at(j, k));
      lower.at(i, j) = s / ljj;
    }
  }
  return true;
}

Mat cholesky_inverse(const Mat& x) {
  const int n = x.n;
  Mat chol;
  if (!cholesky_factor(x, chol, 0.0))
    throw IllConditionedError("cholesky factorization failed: matrix not positive definite");
  // Solve L L* Z = I column by column.
  Mat inv(n);
  std::vector<cplx> col(n);
  for (int rhs = 0; rhs < n; ++rhs) {
    for (int i = 0; i < n; ++i) col[i] = (i == rhs) ? 1.0 : 0.0;
    // forward substitution L y = e
    for (int i = 0; i < n; ++i) {
      cplx s = col[i];
      for (int k = 0; k < i; ++k) s -= chol.at(i, k) * col[k];
      col[i] = s / chol.at(i, i).real();
    }
    // back substitution L* z = y
    for (int i = n - 1; i >= 0; --i) {
      cplx s = col[i];
      for (int k = i + 1; k < n; ++k) s -= std::conj(chol.at(k, i)) * col[k];
      col[i] = s / chol.at(i, i).real();
    }
    for (int i = 0; i < n; ++i) inv.at(i, rhs) = col[i];
  }
  return symmetrize(inv);
}

// ---- AlgebraShape ----

void AlgebraShape::validate() const {
  if (blocks.empty()) throw DomainError("algebra shape needs at least one block");
  for (const AlgebraBlock& b : blocks) {
    if (b.dim < 1) throw DomainError("block dimension must be >= 1");
    if (!(b.weight > 0.0) || !std::isfinite(b.weight))
      throw DomainError("block weight must be finite and > 0");
  }
}

double AlgebraShape::total_weight() const {
  double w = 0.0;
  for (const AlgebraBlock& b : blocks) w += b.weight;
  return w;
}

int AlgebraShape::max_dim() const {
  int d = 0;
  for (const AlgebraBlock& b : blocks) d = std::max(d, b.dim);
  return d;
}

AlgebraShape AlgebraShape::doubled() const {
  std::vector<AlgebraBlock> bs = blocks;
  for (AlgebraBlock& b : bs) b.dim *= 2;
  return AlgebraShape(std::move(bs));
}

// ---- Element ----

Element::Element(const AlgebraShape& s) : shape(s) {
  shape.validate();
  blocks.reserve(s.blocks.size());
  for (const AlgebraBlock& b : s.blocks) blocks.emplace_back(b.dim);
}

Element::Element(const AlgebraShape& s, std::vector<Mat> bs) : shape(s), blocks(std::move(bs)) {
  validate();
}

Element Element::identity(const AlgebraShape& s) {
  Element e(s);
  for (size_t k = 0; k < e.blocks.size(); ++k) e.blocks[k] = Mat::identity(s.blocks[k].dim);
  return e;
}

void Element::validate() const {
  shape.validate();
  if (blocks.size() != shape.blocks.size())
    throw ShapeMismatchError("element block count disagrees with shape");
  for (size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].n != shape.blocks[k].dim)
      throw ShapeMismatchError("element block dimension disagrees with shape");
    for (const cplx& v : blocks[k].a)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("element has a non-finite entry");
  }
}

void require_same_shape(const Element& x, const Element& y) {
  if (!(x.shape == y.shape)) throw ShapeMismatchError("elements live on different algebra shapes");
}

template <typename F>
static Element zip(const Element& x, const Element& y, F&& f) {
  require_same_shape(x, y);
  Element r(x.shape);
  for (size_t k = 0; k < x.blocks.size(); ++k) r.blocks[k] = f(x.blocks[k], y.blocks[k]);
  return r;
}

Element operator+(const Element& x, const Element& y) {
  return zip(x, y, [](const Mat& a, const Mat& b) { return a + b; });
}

Element operator-(const Element& x, const Element& y) {
  return zip(x, y, [](const Mat& a, const Mat& b) { return a - b; });
}

Element operator*(const Element& x, const Element& y) {
  return zip(x, y, [](const Mat& a, const Mat& b) { return a * b; });
}

Element operator*(cplx s, const Element& x) {
  Element r(x.shape);
  for (size_t k = 0; k < x.blocks.size(); ++k) r.blocks[k] = s * x.blocks[k];
  return r;
}

Element adjoint(const Element& x) {
  Element r(x.shape);
  for (size_t k = 0; k < x.blocks.size(); ++k) r.blocks[k] = adjoint(x.blocks[k]);
  return r;
}

Element symmetrize(const Element& x) {
  Element r(x.shape);
  for (size_t k = 0; k < x.blocks.size(); ++k) r.blocks[k] = symmetrize(x.blocks[k]);
  return r;
}

double max_abs(const Element& x) {
  double m = 0.0;
  for (const Mat& b : x.blocks) m = std::max(m, max_abs(b));
  return m;
}

double hermiticity_defect(const Element& x) {
  double d = 0.0;
  for (const Mat& b : x.blocks) d = std::max(d, hermiticity_defect(b));
  return d;
}

Element commutator(const Element& x, const Element& y) {
  return x * y - y * x;
}

Element anticommutator(const Element& x, const Element& y) {
  return x * y + y * x;
}

}  // namespace mazurlab
