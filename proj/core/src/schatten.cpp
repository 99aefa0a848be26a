#include "mazurlab/schatten.hpp"

#include <cmath>

namespace mazurlab {

PNorm::PNorm(double p) : value(p) {
  if (std::isnan(p) || p < 1.0) throw DomainError("norm index must be >= 1 or infinity");
}

double trace_real(const Element& x) {
  return trace_complex(x).real();
}

cplx trace_complex(const Element& x) {
  cplx t = 0.0;
  for (size_t k = 0; k < x.blocks.size(); ++k)
    t += x.shape.blocks[k].weight * mat_trace(x.blocks[k]);
  return t;
}

double operator_norm_from_values(const std::vector<std::vector<double>>& sv) {
  double m = 0.0;
  for (const auto& bv : sv)
    for (double s : bv) m = std::max(m, s);
  return m;
}

double sigma_moment_from_values(const AlgebraShape& shape,
                                const std::vector<std::vector<double>>& sv, double r) {
  if (!(r > 0.0)) throw DomainError("sigma moment exponent must be > 0");
  // Factor out the largest singular value so sigma^r neither overflows nor
  // drains to zero for the large exponents (p / theta) in play.
  double top = operator_norm_from_values(sv);
  if (top == 0.0) return 0.0;
  double acc = 0.0;
  for (size_t k = 0; k < sv.size(); ++k) {
    double blk = 0.0;
    for (double s : sv[k]) {
      if (s <= 0.0) continue;
      blk += std::pow(s / top, r);
    }
    acc += shape.blocks[k].weight * blk;
  }
  return top * std::pow(acc, 1.0 / r);
}

double sigma_moment(const Element& x, double r) {
  return sigma_moment_from_values(x.shape, singular_values(x), r);
}

double schatten_norm(const Element& x, PNorm p) {
  const auto sv = singular_values(x);
  if (p.is_inf()) return operator_norm_from_values(sv);
  return sigma_moment_from_values(x.shape, sv, p.value);
}

CheckRecord holder_bound(const Element& x, const Element& y, const Element& z, PNorm p,
                         PNorm a, PNorm b, PNorm c) {
  const double lhs_recip = p.reciprocal();
  const double rhs_recip = a.reciprocal() + b.reciprocal() + c.reciprocal();
  if (std::abs(lhs_recip - rhs_recip) > 1e-12)
    throw ExponentMismatchError("holder exponents do not balance: 1/a + 1/b + 1/c != 1/p");
  CheckRecord rec;
  rec.lemma = Lemma::holder_product;
  rec.p = p.value;
  rec.lhs = schatten_norm(x * y * z, p);
  rec.rhs_structural = schatten_norm(x, a) * schatten_norm(y, b) * schatten_norm(z, c);
  rec.constant = 1.0;
  rec.finalize(0.0);
  return rec;
}

}  // namespace mazurlab
