// Schur multipliers and averaged conjugations.
#include "mazurlab/schur.hpp"

#include <cmath>
#include <functional>
#include <utility>

namespace mazurlab {

Mat mean_power_matrix(const std::vector<double>& lambdas, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw DomainError("mean_power_matrix: alpha must lie in [0, 1]");
  const int n = static_cast<int>(lambdas.size());
  for (double l : lambdas)
    if (!(l > 0.0) || !std::isfinite(l))
      throw DomainError("mean_power_matrix: eigenvalues must be > 0");
  Mat m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      const double li = lambdas[i], lj = lambdas[j];
      const double num = std::pow(li, alpha) * std::pow(lj, 1.0 - alpha) +
                         std::pow(li, 1.0 - alpha) * std::pow(lj, alpha);
      m.at(i, j) = m.at(j, i) = num / (li + lj);
    }
  }
  return m;
}

Mat geometric_matrix(const std::vector<double>& mus) {
  const int n = static_cast<int>(mus.size());
  for (double u : mus)
    if (!(u > 0.0) || !std::isfinite(u))
      throw DomainError("geometric_matrix: eigenvalues must be > 0");
  Mat m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = 0.5;
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = m.at(j, i) = std::sqrt(mus[i] * mus[j]) / (mus[i] + mus[j]);
    }
  }
  return m;
}

namespace {

Multiplier from_reference(const Element& reference,
                          const std::function<Mat(const std::vector<double>&)>& build) {
  SpectralDecomposition dec = hermitian_eig(reference);
  Multiplier m{dec.shape, std::move(dec.basis), {}};
  m.scalars.reserve(dec.values.size());
  for (const auto& vals : dec.values) m.scalars.push_back(build(vals));
  return m;
}

}  // namespace

Multiplier multiplier_mean_power(const Element& reference, double alpha) {
  return from_reference(reference, [alpha](const std::vector<double>& vals) {
    return mean_power_matrix(vals, alpha);
  });
}

Multiplier multiplier_geometric(const Element& reference) {
  return from_reference(reference, &geometric_matrix);
}

Element schur_apply(const Multiplier& m, const Element& a) {
  if (a.shape != m.shape) throw ShapeMismatchError("schur_apply: shape mismatch");
  a.validate();
  Element r(a.shape);
  for (size_t k = 0; k < a.blocks.size(); ++k) {
    const Mat& v = m.basis[k];
    Mat inner = adjoint(v) * a.blocks[k] * v;
    const int n = inner.n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inner.at(i, j) *= m.scalars[k].at(i, j);
    r.blocks[k] = v * inner * adjoint(v);
  }
  return r;
}

Element averaged_conjugation(const std::vector<Element>& factors,
                             const std::vector<double>& weights,
                             const Element& a) {
  if (factors.size() != weights.size())
    throw DomainError("averaged_conjugation: factor/weight count mismatch");
  if (factors.empty()) throw DomainError("averaged_conjugation: empty family");
  a.validate();
  Element normal(a.shape);
  for (size_t j = 0; j < factors.size(); ++j) {
    const Element& v = factors[j];
    require_same_shape(v, a);
    const double w = weights[j];
    if (!std::isfinite(w) || w < 0.0)
      throw DomainError("averaged_conjugation: weights must be finite and >= 0");
    const double scale = std::fmax(1.0, max_abs(v));
    if (hermiticity_defect(v) > kHermTol * scale)
      throw NotHermitianError("averaged_conjugation: factor is not self-adjoint");
    normal = normal + cplx(w, 0.0) * (v * v);
  }
  if (max_abs(normal - Element::identity(a.shape)) > kConjugationNormTol)
    throw NotNormalizedError("averaged_conjugation: sum w v^2 is not the identity");
  Element r(a.shape);
  for (size_t j = 0; j < factors.size(); ++j) {
    if (weights[j] == 0.0) continue;
    r = r + cplx(weights[j], 0.0) * (factors[j] * a * factors[j]);
  }
  return r;
}

ConjugationFamily resolvent_family(const Element& z, double theta,
                                   const QuadratureScheme& scheme) {
  const Element g2 = gamma_square(z, theta, scheme);
  const Element ginv = hermitian_eig(g2).apply(
      [](double l) { return 1.0 / std::sqrt(l); });
  const double c = c_theta(theta);
  ConjugationFamily fam;
  fam.factors.reserve(scheme.nodes);
  fam.weights.reserve(scheme.nodes);
  for_each_log_node(scheme, [&](double v, double w) {
    fam.factors.push_back(symmetrize(resolvent_map(z, std::exp(v)) * ginv));
    fam.weights.push_back(c * w * std::exp(theta * v));
  });
  return fam;
}

}  // namespace mazurlab
