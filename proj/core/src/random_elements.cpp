#include "mazurlab/random_elements.hpp"

#include <cmath>

namespace mazurlab {

namespace {

Mat gaussian_mat(int n, Rng& rng) {
  Mat g(n);
  for (cplx& v : g.a) v = rng.cnormal();
  return g;
}

// Modified Gram-Schmidt with one re-orthogonalization pass.  Columns are
// normalized with real positive pivots, so the result is Haar when the
// input is complex Gaussian.
Mat mgs_unitary(Mat g) {
  const int n = g.n;
  Mat q(n);
  for (int j = 0; j < n; ++j) {
    std::vector<cplx> w(n);
    for (int i = 0; i < n; ++i) w[i] = g.at(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        cplx proj = 0.0;
        for (int i = 0; i < n; ++i) proj += std::conj(q.at(i, k)) * w[i];
        for (int i = 0; i < n; ++i) w[i] -= proj * q.at(i, k);
      }
    }
    double nrm = 0.0;
    for (int i = 0; i < n; ++i) nrm += std::norm(w[i]);
    nrm = std::sqrt(nrm);
    for (int i = 0; i < n; ++i) q.at(i, j) = w[i] / nrm;
  }
  return q;
}

Element assemble_spectral(const AlgebraShape& shape, Rng& rng,
                          const std::function<double(Rng&)>& draw_eigenvalue) {
  Element x(shape);
  for (size_t k = 0; k < x.blocks.size(); ++k) {
    const int n = shape.blocks[k].dim;
    const Mat q = mgs_unitary(gaussian_mat(n, rng));
    std::vector<double> lam(n);
    for (double& l : lam) l = draw_eigenvalue(rng);
    Mat m(n);
    for (int e = 0; e < n; ++e)
      for (int i = 0; i < n; ++i) {
        const cplx lie = lam[e] * q.at(i, e);
        for (int j = 0; j < n; ++j) m.at(i, j) += lie * std::conj(q.at(j, e));
      }
    x.blocks[k] = symmetrize(m);
  }
  return x;
}

}  // namespace

Element random_unitary(const AlgebraShape& shape, Rng& rng) {
  Element u(shape);
  for (size_t k = 0; k < u.blocks.size(); ++k)
    u.blocks[k] = mgs_unitary(gaussian_mat(shape.blocks[k].dim, rng));
  return u;
}

Element random_positive(const AlgebraShape& shape, Rng& rng, double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("random_positive needs 0 < lo <= hi");
  return assemble_spectral(shape, rng, [&](Rng& r) { return r.log_uniform(lo, hi); });
}

Element random_selfadjoint_spread(const AlgebraShape& shape, Rng& rng, double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo))
    throw DomainError("random_selfadjoint_spread needs 0 < lo <= hi");
  return assemble_spectral(shape, rng, [&](Rng& r) {
    const double mag = r.log_uniform(lo, hi);
    return (r.uniform01() < 0.5) ? mag : -mag;
  });
}

Element random_gaussian(const AlgebraShape& shape, Rng& rng) {
  Element g(shape);
  for (size_t k = 0; k < g.blocks.size(); ++k)
    g.blocks[k] = gaussian_mat(shape.blocks[k].dim, rng);
  return g;
}

Element random_contraction(const AlgebraShape& shape, Rng& rng, bool selfadjoint) {
  Element g = random_gaussian(shape, rng);
  if (selfadjoint) g = symmetrize(g);
  double opnorm = 0.0;
  for (const auto& bv : singular_values(g))
    if (!bv.empty()) opnorm = std::max(opnorm, bv.front());
  const double radius = rng.uniform_pos();
  if (opnorm == 0.0) return g;  // zero draw: already a contraction
  return cplx(radius / opnorm, 0.0) * g;
}

}  // namespace mazurlab
