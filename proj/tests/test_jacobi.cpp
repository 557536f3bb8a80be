#include <doctest.h>

#include "freeprob/error.hpp"
#include "freeprob/jacobi.hpp"
#include "freeprob/specfun.hpp"

using namespace freeprob;

namespace {
const Scalar Q = Scalar::q();
const Scalar T = Scalar::t();
const Scalar one(1L);
const Scalar E = Scalar::q_pow(2);
}  // namespace

TEST_SUITE("jacobi") {

TEST_CASE("power expansion closed form") {
  const Series u = u_series(6, Rat(2));
  CHECK(u_power_closed(1, 6, Rat(2)) == u);
  const Series sq = u_power_closed(2, 6, Rat(2));
  CHECK(sq[2] == E * E);            // phi(u_{2t})^2
  CHECK(sq[2] == u[1] * u[1]);
  CHECK(u_power_closed(0, 3, Rat(2))[0] == one);
}

TEST_CASE("rescaled moment convolutions") {
  CHECK(s_coeff(1) == one);
  CHECK(s_coeff(2) == one - T);
  // m = j: s_1^m = 1 on both sides.
  CHECK(convolution_identity(3, 3));
  // s_1 s_2 + s_2 s_1 against the Laguerre value at (m, j) = (2, 3).
  CHECK(convolution_identity(2, 3));
  const Scalar direct = Scalar(2L) * s_coeff(1) * s_coeff(2);
  CHECK(direct ==
        Scalar(Rat(2, 3)) * laguerre(1, Scalar(2L), Scalar(3L) * T));
  CHECK(convolution_derivative_identity(4));
  CHECK_THROWS_AS(convolution_identity(3, 2), DomainError);
}

TEST_CASE("moment generating function") {
  const Series a = m_series_direct(4);
  const Series b = m_series_moments(4);
  CHECK(a == b);
  CHECK(a[0] == one);
  CHECK(a[1] == (one + E) / Scalar(2L));
}

TEST_CASE("reciprocal R-transform coefficients") {
  const CoeffTable oracle = b_table_oracle(3);
  CHECK(oracle.at_index(1) == one);
  CHECK(oracle.at_index(2) == -(one + E) / Scalar(2L));
  const CoeffTable printed = b_table_closed(2, BVariant::AsPrinted);
  CHECK(printed.at_index(2) == -E / Scalar(2L));
  const CoeffTable corrected = b_table_closed(3, BVariant::Corrected);
  for (int n = 1; n <= 3; ++n)
    CHECK(corrected.at_index(n) == oracle.at_index(n));
}

TEST_CASE("denominator expansion polynomials") {
  CHECK(q_poly(0, 5) == one);
  CHECK(q_poly(1, 2) == Scalar(-4L));
  const auto rep = q_integral_representation(3, 2);
  CHECK_FALSE(rep.match);
  CHECK(rep.ratio == (T / Scalar(2L)).pow(4));
}

TEST_CASE("hypergeometric remark") {
  CHECK(hyper_remark_identity(2, 0));
  CHECK(hyper_remark_identity(3, 1));
  CHECK(hyper_remark_identity(4, 3));
  CHECK(hyper_remark_identity_2f1(4));
}

TEST_CASE("H coefficients") {
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(h_poly(0, n) == one / (one + E).pow(static_cast<long>(n)));
  // The as-printed reading reproduces the displayed two-term expansion ...
  const Scalar printed = h_poly(1, 1, HVariant::AsPrinted);
  const Scalar displayed =
      -(one + Scalar(2L) * T * E / (one + E)) / (one + E);
  CHECK(printed == displayed);
  // ... while the sign-corrected one matches the direct series expansion.
  const Series direct = g_series_direct(1, 3);
  CHECK(h_poly(1, 1, HVariant::SignCorrected) == direct[1]);
  CHECK(printed != direct[1]);
}

TEST_CASE("d coefficients") {
  // True Taylor coefficients of (1-z)^(n+1)/(1+z)^(2n+1).
  CHECK(d_coeff_series(0, 2) == 1);
  CHECK(d_coeff_series(1, 2) == -8);
  // The printed double sum drops the alternating sign.
  CHECK(d_coeff_printed(1, 2) == 2);
}

TEST_CASE("inverse moment coefficients and S-transform") {
  const CoeffTable c = c_table_oracle(2);
  CHECK(c.at_index(1) == Scalar(2L) / (one + E));
  CHECK(c.at_index(1).subst_q(Rat(0)) == Scalar(2L));
  // m_1 tends to 1/2 in the same limit.
  const Series m = m_series_moments(1);
  CHECK(m[1].subst_q(Rat(0)) == Scalar(Rat(1, 2)));
  const CoeffTable corrected = c_table_closed(2, CVariant::Corrected);
  CHECK(corrected.at_index(2) == c.at_index(2));
  const CoeffTable s = s_transform(2);
  CHECK(s.at_index(0) == c.at_index(1));
}

TEST_CASE("free cumulants of the process") {
  const CoeffTable k1 = jacobi_cumulants_r(3);
  const CoeffTable k2 = jacobi_cumulants_moebius(3);
  const CoeffTable k3 = jacobi_cumulants_star(3);
  CHECK(k1.at_index(1) == (one + E) / Scalar(2L));
  for (int n = 1; n <= 3; ++n) {
    CHECK(k1.at_index(n) == k2.at_index(n));
    CHECK(k1.at_index(n) == k3.at_index(n));
  }
}

}  // TEST_SUITE
