// Randomized instance generators.  All draws go through a caller-supplied
// Rng so a recorded seed replays the exact element.
#pragma once

#include "mazurlab/eig.hpp"
#include "mazurlab/rng.hpp"

namespace mazurlab {

// Haar-distributed unitary per block: Gram-Schmidt QR of a complex Gaussian
// matrix.  The normalization makes every R diagonal entry real positive,
// which is what makes the factor Haar rather than merely unitary.
Element random_unitary(const AlgebraShape& shape, Rng& rng);

// Positive element with spectrum drawn log-uniform in [lo, hi] and a Haar
// eigenbasis.  0 < lo <= hi required; lo == hi gives that scalar spectrum.
Element random_positive(const AlgebraShape& shape, Rng& rng, double lo, double hi);

// Self-adjoint element with eigenvalues +/- log-uniform in [lo, hi]
// (independent fair signs) and a Haar eigenbasis.
Element random_selfadjoint_spread(const AlgebraShape& shape, Rng& rng, double lo, double hi);

// Entrywise complex Gaussian divided by its operator norm, then scaled by a
// uniform (0, 1] radius: operator norm <= 1 with probability one.  The
// self-adjoint variant symmetrizes before normalizing.
Element random_contraction(const AlgebraShape& shape, Rng& rng, bool selfadjoint = false);

// Entrywise complex Gaussian element (no normalization).
Element random_gaussian(const AlgebraShape& shape, Rng& rng);

}  // namespace mazurlab
