// The Mazur map between unit balls of p- and q-norms, together with the
// 2x2 dilation constructions that transfer statements between selfadjoint,
// positive and general elements, and the Cayley transform that trades a
// selfadjoint contraction for a unitary.
#pragma once

#include "mazurlab/algebra.hpp"

namespace mazurlab {

// Exponent pair for the map from the p-ball to the q-ball.  Both exponents
// are finite and >= 1; anything else throws DomainError at construction.
struct MazurParams {
  double p = 1.0;
  double q = 1.0;

  MazurParams(double p_in, double q_in);

  double power() const { return p / q; }
  // Hoelder exponent of the map on unit balls: min(p/q, 1).
  double theta() const { return power() < 1.0 ? power() : 1.0; }
};

// M_{p,q}(x) = u |x|^{p/q} where x = u |x| is the polar decomposition.
// When p == q exactly the map is the identity and x is returned unchanged.
Element mazur_map(const Element& x, const MazurParams& params);
Element mazur_map(const Element& x, double p, double q);

// Selfadjoint dilation [[0, x], [x*, 0]] on the doubled shape.  Its
// p-norm is 2^{1/p} times the p-norm of x, and the map commutes with it:
// M(dilate(x)) = dilate(M(x)).
Element dilate_selfadjoint(const Element& x);

struct CommutatorDilation {
  Element x;  // diag(x, y)
  Element b;  // [[0, I], [0, 0]]
};

// Commutator dilation turning a difference into a commutator:
// [diag(x,y), b] has upper-right block x - y, and the same holds after
// applying the map blockwise.
CommutatorDilation dilate_commutator(const Element& x, const Element& y);

// Extracts the (row_half, col_half) corner of every block of an element
// living on a doubled shape, as an element of the halved shape.  Throws
// DomainError when some block dimension is odd or an index is not 0/1.
Element corner_block(const Element& x, int row_half, int col_half);

// Cayley transform u = (b - i)(b + i)^{-1} of a selfadjoint element,
// computed spectrally.  The result is unitary; for contractions b the
// inverse of 1 - u has operator norm at most 1/sqrt(2).
Element cayley_transform(const Element& b);

}  // namespace mazurlab
