// Tests for the ball map and the dilation toolbox: frozen small examples,
// the exact identity short circuit, norm covariance between source and
// target exponents, and the structural identities the larger estimates
// lean on.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <utility>

#include "doctest.h"
#include "mazurlab/mazur.hpp"
#include "mazurlab/random_elements.hpp"
#include "mazurlab/rng.hpp"
#include "mazurlab/schatten.hpp"

using namespace mazurlab;

namespace {
AlgebraShape weighted_shape() { return AlgebraShape{{3, 1.0}, {2, 0.5}}; }
}  // namespace

TEST_CASE("exponent validation") {
  CHECK_THROWS_AS(MazurParams(0.5, 2.0), DomainError);
  CHECK_THROWS_AS(MazurParams(2.0, 0.0), DomainError);
  CHECK_THROWS_AS(MazurParams(-1.0, 2.0), DomainError);
  CHECK_THROWS_AS(MazurParams(std::numeric_limits<double>::infinity(), 2.0),
                  DomainError);
  CHECK(MazurParams(1.0, 2.0).power() == 0.5);
  CHECK(MazurParams(1.0, 2.0).theta() == 0.5);
  CHECK(MazurParams(4.0, 2.0).power() == 2.0);
  CHECK(MazurParams(4.0, 2.0).theta() == 1.0);
}

TEST_CASE("frozen diagonal example") {
  Element x(AlgebraShape::simple(1));
  x.blocks[0].at(0, 0) = 4.0;
  const Element m = mazur_map(x, 1.0, 2.0);
  CHECK(std::abs(m.blocks[0].at(0, 0) - cplx(2.0)) < 1e-14);
}

TEST_CASE("frozen nilpotent example keeps its isometry") {
  Element x(AlgebraShape::simple(2));
  x.blocks[0].at(0, 1) = 2.0;
  const Element m = mazur_map(x, 1.0, 2.0);
  CHECK(std::abs(m.blocks[0].at(0, 1) - cplx(std::sqrt(2.0))) < 1e-13);
  CHECK(std::abs(m.blocks[0].at(0, 0)) < 1e-14);
  CHECK(std::abs(m.blocks[0].at(1, 0)) < 1e-14);
  CHECK(std::abs(m.blocks[0].at(1, 1)) < 1e-14);
}

TEST_CASE("negative scalars keep their sign") {
  Element x(AlgebraShape::simple(1));
  x.blocks[0].at(0, 0) = -4.0;
  const Element m = mazur_map(x, 1.0, 2.0);
  CHECK(std::abs(m.blocks[0].at(0, 0) - cplx(-2.0)) < 1e-14);
}

TEST_CASE("equal exponents return the input unchanged bitwise") {
  Rng rng(307);
  Element x = random_gaussian(weighted_shape(), rng);
  for (double p : {1.0, 1.7, 3.0}) {
    const Element m = mazur_map(x, p, p);
    for (size_t k = 0; k < x.blocks.size(); ++k)
      for (size_t i = 0; i < x.blocks[k].a.size(); ++i)
        CHECK(m.blocks[k].a[i] == x.blocks[k].a[i]);
  }
}

TEST_CASE("map covariance between norms") {
  // |M(x)|_q^q = |x|_p^p: the map carries the p-sphere to the q-sphere.
  Rng rng(311);
  for (int trial = 0; trial < 10; ++trial) {
    Element x = random_gaussian(weighted_shape(), rng);
    for (auto [p, q] : {std::pair{1.0, 2.0}, {3.0, 1.5}, {2.0, 5.0}}) {
      const Element m = mazur_map(x, p, q);
      const double lhs = std::pow(schatten_norm(m, PNorm(q)), q);
      const double rhs = std::pow(schatten_norm(x, PNorm(p)), p);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
  }
}

TEST_CASE("map composes along exponent chains") {
  Rng rng(313);
  Element x = random_gaussian(weighted_shape(), rng);
  const Element two_step = mazur_map(mazur_map(x, 4.0, 2.0), 2.0, 1.0);
  const Element direct = mazur_map(x, 4.0, 1.0);
  CHECK(max_abs(two_step - direct) < 1e-8 * std::fmax(1.0, max_abs(direct)));
}

TEST_CASE("map preserves positivity and selfadjointness") {
  Rng rng(317);
  Element pos = random_positive(weighted_shape(), rng, 0.1, 4.0);
  const Element mp = mazur_map(pos, 2.0, 3.0);
  CHECK(hermiticity_defect(mp) < 1e-12);
  for (const auto& bv : hermitian_eigenvalues(mp))
    for (double v : bv) CHECK(v > -1e-10);

  Element sa = random_selfadjoint_spread(weighted_shape(), rng, 0.1, 2.0);
  const Element ms = mazur_map(sa, 2.0, 3.0);
  CHECK(hermiticity_defect(ms) < 1e-11);
}

TEST_CASE("selfadjoint dilation doubles with the expected norm factor") {
  Rng rng(331);
  Element x = random_gaussian(weighted_shape(), rng);
  const Element d = dilate_selfadjoint(x);
  CHECK(hermiticity_defect(d) < 1e-15);
  for (double p : {1.0, 2.0, 3.0}) {
    const double lhs = schatten_norm(d, PNorm(p));
    const double rhs = std::pow(2.0, 1.0 / p) * schatten_norm(x, PNorm(p));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
  CHECK(schatten_norm(d, PNorm::inf()) ==
        doctest::Approx(schatten_norm(x, PNorm::inf())).epsilon(1e-12));
}

TEST_CASE("map commutes with the selfadjoint dilation") {
  Rng rng(337);
  Element x = random_gaussian(weighted_shape(), rng);
  const Element lhs = mazur_map(dilate_selfadjoint(x), 1.0, 2.0);
  const Element rhs = dilate_selfadjoint(mazur_map(x, 1.0, 2.0));
  CHECK(max_abs(lhs - rhs) < 1e-9 * std::fmax(1.0, max_abs(rhs)));
}

TEST_CASE("commutator dilation turns differences into commutators") {
  Rng rng(341);
  Element x = random_positive(weighted_shape(), rng, 0.1, 3.0);
  Element y = random_positive(weighted_shape(), rng, 0.1, 3.0);
  const CommutatorDilation d = dilate_commutator(x, y);
  const Element c = commutator(d.x, d.b);
  CHECK(max_abs(corner_block(c, 0, 1) - (x - y)) < 1e-14);
  CHECK(max_abs(corner_block(c, 0, 0)) < 1e-14);
  CHECK(max_abs(corner_block(c, 1, 1)) < 1e-14);
  // Same identity after the map: diag(x, y) maps blockwise.
  const Element mapped = mazur_map(d.x, 2.0, 4.0);
  const Element mc = commutator(mapped, d.b);
  const Element want = mazur_map(x, 2.0, 4.0) - mazur_map(y, 2.0, 4.0);
  CHECK(max_abs(corner_block(mc, 0, 1) - want) < 1e-10 * std::fmax(1.0, max_abs(want)));
  // The partial isometry b is a contraction.
  CHECK(schatten_norm(d.b, PNorm::inf()) == doctest::Approx(1.0));
}

TEST_CASE("corner extraction rejects bad arguments") {
  Element odd(AlgebraShape::simple(3));
  CHECK_THROWS_AS(corner_block(odd, 0, 0), DomainError);
  Element even(AlgebraShape::simple(4));
  CHECK_THROWS_AS(corner_block(even, 2, 0), DomainError);
  CHECK_THROWS_AS(corner_block(even, 0, -1), DomainError);
}

TEST_CASE("cayley transform of frozen inputs") {
  const AlgebraShape shape = AlgebraShape::simple(2);
  // b = 0 -> (0 - i)(0 + i)^{-1} = -1.
  const Element u0 = cayley_transform(Element(shape));
  CHECK(max_abs(u0 + Element::identity(shape)) < 1e-14);
  // b = 1 -> (1 - i)/(1 + i) = -i.
  const Element u1 = cayley_transform(Element::identity(shape));
  Element want(shape);
  for (auto& blk : want.blocks)
    for (int i = 0; i < blk.n; ++i) blk.at(i, i) = cplx(0.0, -1.0);
  CHECK(max_abs(u1 - want) < 1e-14);
}

TEST_CASE("cayley transform is unitary with the contraction resolvent bound") {
  Rng rng(347);
  for (int trial = 0; trial < 10; ++trial) {
    Element b = random_contraction(weighted_shape(), rng, true);
    const Element u = cayley_transform(b);
    CHECK(max_abs(adjoint(u) * u - Element::identity(b.shape)) < 1e-12);
    // For |b| <= 1 the eigenvalues of u stay in the left half circle, so
    // (1 - u)^{-1} exists with operator norm at most 1/sqrt(2).
    const Element one_minus = Element::identity(b.shape) - u;
    const SingularDecomposition dec = svd(one_minus);
    double smallest = 1e300;
    for (const auto& bv : dec.sigma) smallest = std::fmin(smallest, bv.back());
    CHECK(1.0 / smallest <= 1.0 / std::sqrt(2.0) + 1e-10);
  }
  Element skew(AlgebraShape::simple(2));
  skew.blocks[0].at(0, 1) = 1.0;
  CHECK_THROWS_AS(cayley_transform(skew), NotHermitianError);
}
