#include <doctest.h>

#include "freeprob/error.hpp"
#include "freeprob/schur.hpp"

using namespace freeprob;

namespace {
const Scalar Q = Scalar::q();
const Scalar T = Scalar::t();
const Scalar one(1L);
}  // namespace

TEST_SUITE("schur") {

TEST_CASE("herglotz transform") {
  const Series h = herglotz_series(4);
  CHECK(h[0] == one);
  CHECK(h[1] == Scalar(2L) * Q);
  CHECK(xi_inverse_identity(5));
}

TEST_CASE("schur function routes") {
  const Series a = f0_closed(5);
  const Series b = f0_from_herglotz(5);
  CHECK(a == b);
  CHECK(a[0] == Q);
  CHECK(a[1] == -(T * Q * Q));
}

TEST_CASE("exponential closed form") {
  CHECK(exp_ku_closed(0, 4) == Series::constant(one, 4));
  const Series f0 = f0_closed(4);
  CHECK(exp_ku_closed(1, 4) == f0.scaled(Q.pow(-1)));
}

TEST_CASE("geometric power sums") {
  const Scalar e = Scalar::q_pow(2);
  CHECK(euler_power_sum(0) == e / (one - e));
  CHECK(euler_power_sum(1) == e / ((one - e) * (one - e)));
  // sum k^2 E^k = E(1+E)/(1-E)^3.
  CHECK(euler_power_sum(2) == e * (one + e) / (one - e).pow(3));
}

TEST_CASE("first iterate") {
  const Series oracle = f1_schur_step(3);
  const Series closed = f1_closed(3, F1Prefactor::PropositionForm);
  CHECK(closed == oracle);
  const Scalar e = Scalar::q_pow(2);
  CHECK(closed[0] == -(T * e) / (one - e));
  CHECK(f1_closed(1, F1Prefactor::ProofForm)[0] != oracle[0]);
}

TEST_CASE("verblunsky coefficients") {
  const Series f0 = f0_closed(4);
  const auto gammas = schur_algorithm(f0, 2);
  CHECK(gammas[0] == Q);
  CHECK(gammas[1] == -(T * Q * Q) / (one - Q * Q));
  const Scalar num =
      T * Q.pow(3) * (Scalar(3L) * T - Scalar(2L) + (Scalar(2L) - T) * Q.pow(2));
  const Scalar den =
      Scalar(2L) * (one - Scalar(2L) * Q.pow(2) + (one - T * T) * Q.pow(4));
  CHECK(gammas[2] == num / den);
  CHECK_THROWS_AS(schur_algorithm(f0, 4), DomainError);
}

TEST_CASE("rebuild reproduces the leading coefficients") {
  const Series f0 = f0_closed(4);
  const auto gammas = schur_algorithm(f0, 2);
  const Series rebuilt = schur_rebuild(gammas, 4);
  for (int k = 0; k <= 2; ++k) CHECK(rebuilt[k] == f0[k]);
  CHECK_THROWS_AS(schur_rebuild({}, 3), DomainError);
}

}  // TEST_SUITE
