#include "mazurlab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace mazurlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// One cyclic Jacobi pass structure: values end up in `vals` ascending and,
// when `vecs` is non-null, the accumulated unitary lands there with matching
// column order.
void jacobi_hermitian(Mat a, std::vector<double>& vals, Mat* vecs) {
  const int n = a.n;
  vals.assign(n, 0.0);
  if (vecs) *vecs = Mat::identity(n);
  if (n == 1) {
    vals[0] = a.at(0, 0).real();
    return;
  }

  // Absolute rotation threshold fixed from the initial scale.  Leaving
  // off-diagonals below it bounds the backward error by ~n * thr, which
  // keeps zero singular values of dilated blocks at the eps noise floor.
  double scale = 0.0;
  for (const cplx& v : a.a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return;  // zero matrix: done
  const double thr = 0.25 * kEps * scale;

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx beta = a.at(p, q);
        const double babs = std::abs(beta);
        if (babs <= thr) continue;
        rotated = true;

        const double alpha = a.at(p, p).real();
        const double gamma = a.at(q, q).real();
        const double tau = (gamma - alpha) / (2.0 * babs);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx f = std::conj(beta) / babs;  // e^{-i arg beta}
        const cplx sf = s * f;
        const cplx scf = s * std::conj(f);

        // Columns: A <- A * J with J_pp=c, J_pq=s, J_qp=-s f, J_qq=c f.
        for (int k = 0; k < n; ++k) {
          const cplx akp = a.at(k, p);
          const cplx akq = a.at(k, q);
          a.at(k, p) = c * akp - sf * akq;
          a.at(k, q) = s * akp + c * f * akq;
        }
        // Rows: A <- J* A.
        for (int k = 0; k < n; ++k) {
          const cplx apk = a.at(p, k);
          const cplx aqk = a.at(q, k);
          a.at(p, k) = c * apk - scf * aqk;
          a.at(q, k) = s * apk + c * std::conj(f) * aqk;
        }
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        a.at(p, p) = cplx(a.at(p, p).real(), 0.0);
        a.at(q, q) = cplx(a.at(q, q).real(), 0.0);

        if (vecs) {
          for (int k = 0; k < n; ++k) {
            const cplx vkp = vecs->at(k, p);
            const cplx vkq = vecs->at(k, q);
            vecs->at(k, p) = c * vkp - sf * vkq;
            vecs->at(k, q) = s * vkp + c * f * vkq;
          }
        }
      }
    }
    if (!rotated) {
      for (int i = 0; i < n; ++i) vals[i] = a.at(i, i).real();
      // Sort ascending, carrying eigenvector columns along.
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int i, int j) { return vals[i] < vals[j]; });
      std::vector<double> sorted(n);
      for (int i = 0; i < n; ++i) sorted[i] = vals[order[i]];
      vals = std::move(sorted);
      if (vecs) {
        Mat vv(n);
        for (int j = 0; j < n; ++j)
          for (int i = 0; i < n; ++i) vv.at(i, j) = vecs->at(i, order[j]);
        *vecs = std::move(vv);
      }
      return;
    }
  }
  throw NoConvergenceError("jacobi eigensolver exhausted its sweep budget (" +
                           std::to_string(kJacobiMaxSweeps) + " sweeps)");
}

void check_hermitian_input(const Element& x, const char* who) {
  x.validate();
  const double tol = kHermTol * std::max(1.0, max_abs(x));
  const double defect = hermiticity_defect(x);
  if (defect > tol)
    throw NotHermitianError(std::string(who) + ": input is not self-adjoint (defect " +
                            std::to_string(defect) + ")");
}

// Hermitian dilation [[0, A], [A*, 0]] of one block.
Mat dilate_block(const Mat& a) {
  const int m = a.n;
  Mat w(2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      w.at(i, m + j) = a.at(i, j);
      w.at(m + j, i) = std::conj(a.at(i, j));
    }
  return w;
}

}  // namespace

// ---- SpectralDecomposition ----

Element SpectralDecomposition::apply(const std::function<double(double)>& f) const {
  Element r(shape);
  for (size_t k = 0; k < basis.size(); ++k) {
    const Mat& v = basis[k];
    const int n = v.n;
    Mat& out = r.blocks[k];
    for (int e = 0; e < n; ++e) {
      const double fe = f(values[k][e]);
      if (fe == 0.0) continue;
      for (int i = 0; i < n; ++i) {
        const cplx vie = fe * v.at(i, e);
        for (int j = 0; j < n; ++j) out.at(i, j) += vie * std::conj(v.at(j, e));
      }
    }
    out = symmetrize(out);
  }
  return r;
}

Element SpectralDecomposition::apply_complex(
    const std::function<cplx(double)>& f) const {
  Element r(shape);
  for (size_t k = 0; k < basis.size(); ++k) {
    const Mat& v = basis[k];
    const int n = v.n;
    Mat& out = r.blocks[k];
    for (int e = 0; e < n; ++e) {
      const cplx fe = f(values[k][e]);
      if (fe == cplx(0.0, 0.0)) continue;
      for (int i = 0; i < n; ++i) {
        const cplx vie = fe * v.at(i, e);
        for (int j = 0; j < n; ++j) out.at(i, j) += vie * std::conj(v.at(j, e));
      }
    }
  }
  return r;
}

Element SpectralDecomposition::reconstruct() const {
  return apply([](double t) { return t; });
}

double SpectralDecomposition::min_value() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& bv : values)
    for (double v : bv) m = std::min(m, v);
  return m;
}

double SpectralDecomposition::max_abs_value() const {
  double m = 0.0;
  for (const auto& bv : values)
    for (double v : bv) m = std::max(m, std::abs(v));
  return m;
}

// ---- Eigen/SVD entry points ----

SpectralDecomposition hermitian_eig(const Element& x) {
  check_hermitian_input(x, "hermitian_eig");
  SpectralDecomposition d;
  d.shape = x.shape;
  d.values.resize(x.blocks.size());
  d.basis.resize(x.blocks.size());
  for (size_t k = 0; k < x.blocks.size(); ++k)
    jacobi_hermitian(symmetrize(x.blocks[k]), d.values[k], &d.basis[k]);
  return d;
}

std::vector<std::vector<double>> hermitian_eigenvalues(const Element& x) {
  check_hermitian_input(x, "hermitian_eigenvalues");
  std::vector<std::vector<double>> vals(x.blocks.size());
  for (size_t k = 0; k < x.blocks.size(); ++k)
    jacobi_hermitian(symmetrize(x.blocks[k]), vals[k], nullptr);
  return vals;
}

SingularDecomposition svd(const Element& x) {
  x.validate();
  SingularDecomposition d;
  d.shape = x.shape;
  const size_t nb = x.blocks.size();
  d.sigma.resize(nb);
  d.u_cols.resize(nb);
  d.v_cols.resize(nb);
  d.on_support.resize(nb);

  // First pass: dilation eigendecompositions, global sigma_max.
  std::vector<std::vector<double>> wvals(nb);
  std::vector<Mat> wvecs(nb);
  for (size_t k = 0; k < nb; ++k) {
    jacobi_hermitian(dilate_block(x.blocks[k]), wvals[k], &wvecs[k]);
    const int m = x.blocks[k].n;
    // Top half of the ascending spectrum holds the singular values.
    for (int i = 0; i < m; ++i)
      d.sigma_max = std::max(d.sigma_max, wvals[k][static_cast<size_t>(2 * m - 1 - i)]);
  }
  const double cut = kSupportRelTol * d.sigma_max;

  for (size_t k = 0; k < nb; ++k) {
    const int m = x.blocks[k].n;
    d.sigma[k].assign(m, 0.0);
    d.u_cols[k] = Mat(m);
    d.v_cols[k] = Mat(m);
    d.on_support[k].assign(m, 0);
    for (int i = 0; i < m; ++i) {
      const int col = 2 * m - 1 - i;  // descending positives
      const double sv = std::max(wvals[k][static_cast<size_t>(col)], 0.0);
      d.sigma[k][i] = sv;
      if (sv <= cut || sv == 0.0) continue;
      d.on_support[k][i] = 1;
      // Eigenvector (a; b) of the dilation gives left half a ~ u, right
      // half b ~ v after normalization.
      double na = 0.0, nb2 = 0.0;
      for (int r = 0; r < m; ++r) {
        na += std::norm(wvecs[k].at(r, col));
        nb2 += std::norm(wvecs[k].at(m + r, col));
      }
      const double sa = 1.0 / std::sqrt(na);
      const double sb = 1.0 / std::sqrt(nb2);
      for (int r = 0; r < m; ++r) {
        d.u_cols[k].at(r, i) = sa * wvecs[k].at(r, col);
        d.v_cols[k].at(r, i) = sb * wvecs[k].at(m + r, col);
      }
    }
  }
  return d;
}

Element SingularDecomposition::apply_power(double r) const {
  Element out(shape);
  for (size_t k = 0; k < u_cols.size(); ++k) {
    const int m = u_cols[k].n;
    for (int i = 0; i < m; ++i) {
      if (!on_support[k][i]) continue;
      const double sr = std::pow(sigma[k][i], r);
      for (int a = 0; a < m; ++a) {
        const cplx left = sr * u_cols[k].at(a, i);
        for (int b = 0; b < m; ++b)
          out.blocks[k].at(a, b) += left * std::conj(v_cols[k].at(b, i));
      }
    }
  }
  return out;
}

Element SingularDecomposition::isometry() const {
  return apply_power(0.0);
}

Element SingularDecomposition::modulus() const {
  Element out(shape);
  for (size_t k = 0; k < v_cols.size(); ++k) {
    const int m = v_cols[k].n;
    for (int i = 0; i < m; ++i) {
      if (!on_support[k][i]) continue;
      const double sv = sigma[k][i];
      for (int a = 0; a < m; ++a) {
        const cplx left = sv * v_cols[k].at(a, i);
        for (int b = 0; b < m; ++b)
          out.blocks[k].at(a, b) += left * std::conj(v_cols[k].at(b, i));
      }
    }
    out.blocks[k] = symmetrize(out.blocks[k]);
  }
  return out;
}

std::vector<std::vector<double>> singular_values(const Element& x) {
  x.validate();
  const double scale = max_abs(x);
  std::vector<std::vector<double>> out(x.blocks.size());
  for (size_t k = 0; k < x.blocks.size(); ++k) {
    const Mat& blk = x.blocks[k];
    const int m = blk.n;
    const double herm_cut = 1e-14 * std::max(1.0, scale);
    std::vector<double> vals;
    if (hermiticity_defect(blk) <= herm_cut) {
      jacobi_hermitian(symmetrize(blk), vals, nullptr);
      for (double& v : vals) v = std::abs(v);
      std::sort(vals.begin(), vals.end(), std::greater<double>());
    } else {
      std::vector<double> wv;
      jacobi_hermitian(dilate_block(blk), wv, nullptr);
      vals.resize(m);
      for (int i = 0; i < m; ++i)
        vals[i] = std::max(wv[static_cast<size_t>(2 * m - 1 - i)], 0.0);
    }
    out[k] = std::move(vals);
  }
  return out;
}

PolarDecomposition polar(const Element& x) {
  const SingularDecomposition d = svd(x);
  return PolarDecomposition{d.isometry(), d.modulus()};
}

SignParts pos_neg_parts(const Element& x) {
  const SpectralDecomposition d = hermitian_eig(x);
  SignParts parts{
      d.apply([](double t) { return t > 0.0 ? t : 0.0; }),
      d.apply([](double t) { return t < 0.0 ? -t : 0.0; }),
      d.apply([](double t) { return t >= 0.0 ? 1.0 : 0.0; }),
      d.apply([](double t) { return t < 0.0 ? 1.0 : 0.0; }),
  };
  return parts;
}

}  // namespace mazurlab
