// Inequality check tests: frozen scalar ratios with closed forms, the
// exact-identity regime, randomized sweeps over every explicit-constant
// check, degenerate-input policy, and the seeded trial replay contract.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mazurlab/checks.hpp"
#include "mazurlab/mazur.hpp"
#include "mazurlab/random_elements.hpp"
#include "mazurlab/rng.hpp"

using namespace mazurlab;

namespace {

AlgebraShape weighted_shape() { return AlgebraShape{{3, 1.0}, {2, 0.5}}; }

Element scalar(double v) {
  Element x(AlgebraShape::simple(1));
  x.blocks[0].at(0, 0) = v;
  return x;
}

}  // namespace

TEST_CASE("record finalize covers the degenerate branches") {
  CheckRecord rec;
  rec.lemma = Lemma::power_contraction;
  rec.constant = 1.0;
  rec.lhs = 0.0;
  rec.rhs_structural = 0.0;
  rec.finalize(kDefaultRatioCap);
  // 0 <= 0 passes through the absolute cushion; the ratio is undefined.
  CHECK(rec.status == CheckStatus::pass);
  CHECK(std::isnan(rec.ratio));

  CheckRecord emp;
  emp.lemma = Lemma::mazur_theorem;
  emp.lhs = 1.0;
  emp.rhs_structural = 0.0;
  emp.finalize(kDefaultRatioCap);
  CHECK(emp.status == CheckStatus::skipped_degenerate);

  CheckRecord over;
  over.lemma = Lemma::mazur_theorem;
  over.lhs = 130.0;
  over.rhs_structural = 1.0;
  over.finalize(kDefaultRatioCap);
  CHECK(over.status == CheckStatus::fail);
  CHECK(over.ratio == doctest::Approx(130.0));

  CheckRecord viol;
  viol.lemma = Lemma::power_contraction;
  viol.constant = 1.0;
  viol.lhs = 2.0;
  viol.rhs_structural = 1.0;
  viol.finalize(kDefaultRatioCap);
  CHECK(viol.status == CheckStatus::fail);
}

TEST_CASE("lemma names round trip") {
  for (Lemma l : {Lemma::power_contraction, Lemma::power_expansion,
                  Lemma::alpha_lipschitz, Lemma::commutator_up,
                  Lemma::commutator_down, Lemma::anticommutator_up,
                  Lemma::anticommutator_down, Lemma::jensen_chain,
                  Lemma::selfadjoint_commutator, Lemma::mazur_theorem,
                  Lemma::holder_product}) {
    CHECK(lemma_from_name(lemma_name(l)) == l);
  }
  CHECK_THROWS_AS(lemma_from_name("no_such_check"), ConfigError);
  CHECK(lemma_has_explicit_constant(Lemma::power_contraction));
  CHECK_FALSE(lemma_has_explicit_constant(Lemma::mazur_theorem));
}

TEST_CASE("scalar ball map ratio has the closed form") {
  // x = e, y = -e on one ball: |x - y|_1 = 2e, |M x - M y|_2 = 2 sqrt(e),
  // ratio = 2 sqrt(e) / sqrt(2 e) = sqrt(2), independent of e.
  for (double eps : {0.9, 0.5, 1e-3}) {
    const CheckRecord rec =
        check_mazur_theorem(scalar(eps), scalar(-eps), 1.0, 2.0);
    CHECK(rec.status == CheckStatus::pass);
    CHECK(rec.ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }
}

TEST_CASE("equal exponents give ratio exactly one") {
  Rng rng(521);
  Element x = random_gaussian(weighted_shape(), rng);
  Element y = random_gaussian(weighted_shape(), rng);
  x = cplx(1.0 / schatten_norm(x, PNorm(2.0)), 0.0) * x;
  y = cplx(1.0 / schatten_norm(y, PNorm(2.0)), 0.0) * y;
  const CheckRecord rec = check_mazur_theorem(x, y, 2.0, 2.0);
  CHECK(rec.status == CheckStatus::pass);
  CHECK(rec.ratio == 1.0);
}

TEST_CASE("ball map check renormalizes and rejects") {
  // Far outside the unit ball: rejected outright.
  CHECK_THROWS_AS(check_mazur_theorem(scalar(3.0), scalar(-0.5), 1.0, 2.0),
                  DomainError);
  // Close pairs are skipped, not scored.
  const CheckRecord rec =
      check_mazur_theorem(scalar(0.5), scalar(0.5 + 1e-9), 1.0, 2.0);
  CHECK(rec.status == CheckStatus::skipped_degenerate);
  CHECK(std::isnan(rec.ratio));
}

TEST_CASE("scalar jensen ratio at one half") {
  // x = b = 1, t = 1/2: lhs = |1 + 1|_2 = 2, rhs = 2 |2|_1^{1/2}; the
  // weighted trace is 1, so lhs / (|xb + bx|_1^t) = 2 / sqrt(2) = sqrt(2)
  // and the constant-2 bound holds with slack.
  const CheckRecord rec = check_jensen_chain(scalar(1.0), scalar(1.0), 0.5);
  CHECK(rec.status == CheckStatus::pass);
  CHECK(rec.constant == 2.0);
  CHECK(rec.lhs == doctest::Approx(2.0));
  CHECK(rec.rhs_structural == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("jensen check gates its inputs") {
  CHECK_THROWS_AS(check_jensen_chain(scalar(1.0), scalar(1.0), 0.7),
                  DomainError);
  CHECK_THROWS_AS(check_jensen_chain(scalar(1.0), scalar(2.0), 0.3),
                  DomainError);  // b must be a contraction
}

TEST_CASE("explicit checks pass across random instances") {
  Rng rng(523);
  for (int trial = 0; trial < 60; ++trial) {
    Element x = random_positive(weighted_shape(), rng, 0.01, 10.0);
    Element y = random_positive(weighted_shape(), rng, 0.01, 10.0);
    Element b = random_contraction(weighted_shape(), rng);
    const double theta = 0.05 + 0.9 * rng.uniform01();
    const double p = 1.0 + 3.0 * rng.uniform01();

    CHECK(check_power_contraction(x, y, theta, p).status == CheckStatus::pass);
    CHECK(check_power_expansion(x, y, theta, p).status == CheckStatus::pass);
    CHECK(check_alpha_lipschitz(x, y, 1.0 + 3.0 * rng.uniform01(), p).status ==
          CheckStatus::pass);
    CHECK(check_commutator_up(x, b, theta, p).status == CheckStatus::pass);
    CHECK(check_commutator_down(x, b, theta, p).status == CheckStatus::pass);
    CHECK(check_jensen_chain(x, b, 0.05 + 0.45 * rng.uniform01()).status ==
          CheckStatus::pass);
  }
}

TEST_CASE("theta one reduces power contraction to the triangle inequality") {
  Rng rng(527);
  Element x = random_positive(weighted_shape(), rng, 0.1, 5.0);
  Element y = random_positive(weighted_shape(), rng, 0.1, 5.0);
  const CheckRecord rec = check_power_contraction(x, y, 1.0, 2.0);
  CHECK(rec.status == CheckStatus::pass);
  CHECK(rec.lhs == doctest::Approx(rec.rhs_structural).epsilon(1e-12));
}

TEST_CASE("power checks validate their arguments") {
  Element x = Element::identity(weighted_shape());
  CHECK_THROWS_AS(check_power_contraction(x, x, 0.0, 2.0), DomainError);
  CHECK_THROWS_AS(check_power_contraction(x, x, 1.5, 2.0), DomainError);
  CHECK_THROWS_AS(check_power_contraction(x, x, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(check_alpha_lipschitz(x, x, 0.9, 2.0), DomainError);
}

TEST_CASE("selfadjoint commutator check covers the three regimes") {
  Rng rng(541);
  Element x = random_selfadjoint_spread(weighted_shape(), rng, 0.1, 5.0);
  Element b = random_contraction(weighted_shape(), rng);

  const CheckRecord same = check_selfadjoint_commutator(x, b, 2.0, 2.0);
  CHECK(same.status == CheckStatus::pass);
  CHECK(same.ratio == 1.0);

  const CheckRecord shrink = check_selfadjoint_commutator(x, b, 1.0, 2.0);
  CHECK(shrink.status == CheckStatus::pass);
  CHECK(std::isfinite(shrink.ratio));

  const CheckRecord grow = check_selfadjoint_commutator(x, b, 2.0, 1.0);
  CHECK(grow.status == CheckStatus::pass);
  CHECK(std::isfinite(grow.ratio));
}

TEST_CASE("selfadjoint commutator sign splitting stays closed") {
  Rng rng(547);
  for (int trial = 0; trial < 40; ++trial) {
    Element x = random_selfadjoint_spread(weighted_shape(), rng, 0.01, 10.0);
    Element b = random_contraction(weighted_shape(), rng);
    const CheckRecord rec = check_selfadjoint_commutator(x, b, 1.5, 2.5);
    // Any split defect beyond tolerance surfaces as an error status.
    CHECK(rec.status != CheckStatus::error);
  }
}

TEST_CASE("anticommutator checks produce finite bounded ratios") {
  Rng rng(557);
  for (int trial = 0; trial < 30; ++trial) {
    Element x = random_positive(weighted_shape(), rng, 0.05, 8.0);
    Element y = random_positive(weighted_shape(), rng, 0.05, 8.0);
    Element b = random_contraction(weighted_shape(), rng);
    const double theta = 0.1 + 0.8 * rng.uniform01();
    const double p = 1.0 + 2.0 * rng.uniform01();
    const CheckRecord up = check_anticommutator_up(x, y, b, theta, p);
    const CheckRecord down = check_anticommutator_down(x, y, b, theta, p);
    for (const CheckRecord& rec : {up, down}) {
      if (rec.status == CheckStatus::skipped_degenerate) continue;
      CHECK(rec.status == CheckStatus::pass);
      CHECK(std::isfinite(rec.ratio));
      CHECK(rec.ratio <= kDefaultRatioCap);
    }
  }
}

TEST_CASE("holder product check forwards and fails on imbalance") {
  Rng rng(563);
  Element x = random_gaussian(weighted_shape(), rng);
  Element y = random_gaussian(weighted_shape(), rng);
  Element z = random_gaussian(weighted_shape(), rng);
  const CheckRecord rec = check_holder_product(x, y, z, 1.0, 3.0, 3.0, 3.0);
  CHECK(rec.status == CheckStatus::pass);
  CHECK_THROWS_AS(check_holder_product(x, y, z, 1.0, 2.0, 2.0, 2.0),
                  ExponentMismatchError);
}

TEST_CASE("seeded trials replay bitwise") {
  CellParams cell;
  cell.lemma = Lemma::mazur_theorem;
  cell.dim = 4;
  cell.p = 1.0;
  cell.q = 2.0;
  for (uint64_t seed : {7ULL, 99ULL, 123456789ULL}) {
    const CheckRecord a = run_trial(cell, seed);
    const CheckRecord b = run_trial(cell, seed);
    CHECK(a.lhs == b.lhs);
    CHECK(a.rhs_structural == b.rhs_structural);
    CHECK(a.status == b.status);
    CHECK(a.seed == seed);
    CHECK(a.dim == 4);
  }
}

TEST_CASE("trials cover every lemma without raising") {
  for (Lemma l : {Lemma::power_contraction, Lemma::power_expansion,
                  Lemma::alpha_lipschitz, Lemma::commutator_up,
                  Lemma::commutator_down, Lemma::anticommutator_up,
                  Lemma::anticommutator_down, Lemma::jensen_chain,
                  Lemma::selfadjoint_commutator, Lemma::mazur_theorem,
                  Lemma::holder_product}) {
    CellParams cell;
    cell.lemma = l;
    cell.dim = 3;
    cell.p = 1.5;
    cell.q = 2.0;
    cell.theta = 0.4;
    cell.alpha = 2.0;
    for (uint64_t seed = 1; seed <= 25; ++seed) {
      const CheckRecord rec = run_trial(cell, seed);
      CHECK(rec.status != CheckStatus::error);
      if (lemma_has_explicit_constant(l)) CHECK(rec.status == CheckStatus::pass);
    }
  }
}

TEST_CASE("dimension one selfadjoint commutators always degenerate") {
  CellParams cell;
  cell.lemma = Lemma::selfadjoint_commutator;
  cell.dim = 1;
  cell.p = 2.0;
  cell.q = 1.0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const CheckRecord rec = run_trial(cell, seed);
    CHECK(rec.status == CheckStatus::skipped_degenerate);
  }
}
