#include <doctest.h>

#include "freeprob/brownian.hpp"
#include "freeprob/error.hpp"
#include "freeprob/ncpart.hpp"

using namespace freeprob;

namespace {
const Scalar Q = Scalar::q();
const Scalar T = Scalar::t();
const Scalar one(1L);
}  // namespace

TEST_SUITE("brownian") {

TEST_CASE("moments") {
  CHECK(fubm_moment(0) == one);
  CHECK(fubm_moment(1) == Q);
  CHECK(fubm_moment(2) == Q * Q * (one - T));
  CHECK(fubm_moment(3) ==
        Q.pow(3) * (one - Scalar(3L) * T + Scalar(Rat(3, 2)) * T * T));
  CHECK(fubm_moment(-2) == fubm_moment(2));
  // Doubled time: phi(u_{2t}) = Q^2.
  CHECK(fubm_moment(1, Rat(2)) == Q * Q);
  CHECK_THROWS_AS(fubm_moment(1, Rat(1, 2)), DomainError);
  // Half-time scale is fine when k keeps the Q-power integral.
  CHECK(fubm_moment(2, Rat(1, 2)) == Q * (Scalar(2L) - T) / Scalar(2L));
}

TEST_CASE("free cumulants") {
  CHECK(fubm_free_cumulant(1) == Q);
  CHECK(fubm_free_cumulant(2) == -(T * Q * Q));
  // n = 4 against the brute-force inversion.
  const MomentOracle oracle = fubm_oracle(Rat(1));
  CHECK(fubm_free_cumulant(4) == mixed_cumulant(oracle, {1, 1, 1, 1}));
  CHECK_THROWS_AS(fubm_free_cumulant(0), DomainError);
}

TEST_CASE("g table") {
  const CoeffTable g = g_table(3);
  CHECK(g.at_index(1) == one - Q * Q);
  CHECK(g.at_index(2) ==
        Scalar(-1L) + Scalar(4L) * Q.pow(2) - (Scalar(3L) + Scalar(2L) * T) * Q.pow(4));
  CHECK_THROWS_AS(g_table(0), DomainError);
  CHECK_THROWS_AS(g.at_index(5), DomainError);
}

TEST_CASE("h table") {
  const CoeffTable h = h_table(2);
  CHECK(h.at_index(0) == Q);
  CHECK(h.at_index(1) == Q * (Scalar(-1L) + (one + T) * Q * Q));
  // Base identity: h_0^2 = g_1'.
  const CoeffTable g = g_table(1);
  CHECK(h.at_index(0) * h.at_index(0) == g.at_index(1).d_dt());
}

TEST_CASE("companion polynomials") {
  CHECK(p_poly(1, 1) == one);
  CHECK(p_poly(1, 4) == one);
  CHECK(p_poly(2, 2) == Scalar(-6L) - Scalar(4L) * T);
  CHECK_THROWS_AS(p_poly(0, 1), DomainError);
}

TEST_CASE("inverse-characteristic coefficients") {
  const CoeffTable closed = a_table_closed(2);
  const CoeffTable oracle = a_table_oracle(2);
  CHECK(closed.at_index(1) == Scalar(-2L) * Q.pow(2));
  CHECK(closed.at_index(1) == oracle.at_index(1));
  CHECK(closed.at_index(2) == oracle.at_index(2));
  CHECK(closed.at_index(2) ==
        Scalar(4L) * Q.pow(2) - (Scalar(6L) + Scalar(4L) * T) * Q.pow(4));
}

TEST_CASE("coefficient identity with the empty sum at n = 1") {
  const CoeffTable g = g_table(1);
  const CoeffTable a = a_table_closed(1);
  CHECK(-(g.at_index(1).d_dt()) == a.at_index(1) / Scalar(2L));
  CHECK(eac_identity(1, g, a));
}

TEST_CASE("integral reports") {
  const auto gamma = p_gamma_integral_identity(2, 2);
  CHECK(gamma.match);
  const auto rep = p_integral_representation(2, 1);
  CHECK_FALSE(rep.match);
  CHECK(rep.ratio == (T / one).pow(4));
  const auto rep2 = p_integral_representation(2, 2);
  CHECK(rep2.ratio == (T / Scalar(2L)).pow(4));
}

}  // TEST_SUITE
