// Weighted trace and Schatten norms on block algebras:
//   tau(x)   = sum_k w_k tr(x_k)
//   |x|_p    = (sum_k w_k sum_i sigma_{k,i}^p)^{1/p},   |x|_inf = max sigma.
// Weights drop out of the infinity norm.  The three-factor Holder check
// lives here too since it is a pure norm statement.
#pragma once

#include "mazurlab/eig.hpp"
#include "mazurlab/records.hpp"

namespace mazurlab {

// Norm index: a real >= 1 or infinity.
struct PNorm {
  double value = 2.0;

  PNorm() = default;
  // Throws DomainError unless p >= 1 (infinity allowed).
  explicit PNorm(double p);
  static PNorm inf() { return PNorm(std::numeric_limits<double>::infinity()); }
  bool is_inf() const { return std::isinf(value); }
  // 1/p with the convention 1/inf = 0.
  double reciprocal() const { return is_inf() ? 0.0 : 1.0 / value; }
};

double trace_real(const Element& x);
cplx trace_complex(const Element& x);

// Schatten p-norm for p >= 1 or infinity.
double schatten_norm(const Element& x, PNorm p);

// (sum_k w_k sum_i sigma^r)^{1/r} for any real r > 0.  For r < 1 this is
// the standard quasi-norm; several inequalities under test use exponents
// theta * p below one, which is why this entry point exists alongside the
// PNorm-validated one.
double sigma_moment(const Element& x, double r);

// As above but from precomputed singular values.
double sigma_moment_from_values(const AlgebraShape& shape,
                                const std::vector<std::vector<double>>& sv, double r);
double operator_norm_from_values(const std::vector<std::vector<double>>& sv);

// |xyz|_p <= |x|_a |y|_b |z|_c for 1/a + 1/b + 1/c = 1/p.  Throws
// ExponentMismatchError when the exponents do not balance to 1e-12.
CheckRecord holder_bound(const Element& x, const Element& y, const Element& z, PNorm p,
                         PNorm a, PNorm b, PNorm c);

}  // namespace mazurlab
