// Mazur map, dilations and Cayley transform.
#include "mazurlab/mazur.hpp"

#include <cmath>
#include <utility>

#include "mazurlab/eig.hpp"

namespace mazurlab {

MazurParams::MazurParams(double p_in, double q_in) : p(p_in), q(q_in) {
  if (!std::isfinite(p) || p < 1.0)
    throw DomainError("mazur exponent p must be finite and >= 1");
  if (!std::isfinite(q) || q < 1.0)
    throw DomainError("mazur exponent q must be finite and >= 1");
}

Element mazur_map(const Element& x, const MazurParams& params) {
  x.validate();
  if (params.p == params.q) return x;
  return svd(x).apply_power(params.power());
}

Element mazur_map(const Element& x, double p, double q) {
  return mazur_map(x, MazurParams(p, q));
}

Element dilate_selfadjoint(const Element& x) {
  x.validate();
  Element r(x.shape.doubled());
  for (size_t k = 0; k < x.blocks.size(); ++k) {
    const Mat& b = x.blocks[k];
    const int n = b.n;
    Mat& out = r.blocks[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        out.at(i, n + j) = b.at(i, j);
        out.at(n + j, i) = std::conj(b.at(i, j));
      }
  }
  return r;
}

CommutatorDilation dilate_commutator(const Element& x, const Element& y) {
  require_same_shape(x, y);
  x.validate();
  y.validate();
  CommutatorDilation d{Element(x.shape.doubled()), Element(x.shape.doubled())};
  for (size_t k = 0; k < x.blocks.size(); ++k) {
    const int n = x.blocks[k].n;
    for (int i = 0; i < n; ++i) {
      d.b.blocks[k].at(i, n + i) = 1.0;
      for (int j = 0; j < n; ++j) {
        d.x.blocks[k].at(i, j) = x.blocks[k].at(i, j);
        d.x.blocks[k].at(n + i, n + j) = y.blocks[k].at(i, j);
      }
    }
  }
  return d;
}

Element corner_block(const Element& x, int row_half, int col_half) {
  if (row_half < 0 || row_half > 1 || col_half < 0 || col_half > 1)
    throw DomainError("corner_block: half indices must be 0 or 1");
  std::vector<AlgebraBlock> halved;
  halved.reserve(x.shape.blocks.size());
  for (const AlgebraBlock& b : x.shape.blocks) {
    if (b.dim % 2 != 0)
      throw DomainError("corner_block: block dimension is odd");
    halved.push_back({b.dim / 2, b.weight});
  }
  Element r((AlgebraShape(std::move(halved))));
  for (size_t k = 0; k < x.blocks.size(); ++k) {
    const int h = r.blocks[k].n;
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j)
        r.blocks[k].at(i, j) = x.blocks[k].at(row_half * h + i, col_half * h + j);
  }
  return r;
}

Element cayley_transform(const Element& b) {
  const cplx unit(0.0, 1.0);
  return hermitian_eig(b).apply_complex(
      [unit](double t) { return (t - unit) / (t + unit); });
}

}  // namespace mazurlab
