#include <doctest.h>

#include "freeprob/error.hpp"
#include "freeprob/scalar.hpp"

using namespace freeprob;

namespace {
const Scalar Q = Scalar::q();
const Scalar T = Scalar::t();
const Scalar one(1L);
}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("field arithmetic") {
  CHECK(Q + Q == Scalar(2L) * Q);
  CHECK((one - Q * Q) / (one - Q) == one + Q);
  CHECK(Q.pow(-2) == one / (Q * Q));
  CHECK((Q.pow(-2) * Q.pow(2)).is_one());
  CHECK(Scalar(0L).is_zero());
  CHECK((Q - Q).is_zero());
}

TEST_CASE("division by zero carries the operand text") {
  try {
    Scalar x = (one + Q) / (Q - Q);
    FAIL("expected DivisionByZeroError");
  } catch (const DivisionByZeroError& e) {
    CHECK(std::string(e.what()).find("1 + Q") != std::string::npos);
  }
}

TEST_CASE("canonical form") {
  // Denominator monic under grlex(t > Q); coprime num/den.
  const Scalar s = Scalar::from_frac(
      Poly::from_terms({{Mono{0, 1}, Rat(2)}}),          // 2Q
      Poly::from_terms({{Mono{0, 2}, Rat(4)}, {Mono{0, 0}, Rat(-4)}}));  // 4Q^2-4
  CHECK(s.den().lead_coeff() == 1);
  CHECK(s == Q / (Scalar(2L) * (Q * Q - one)));
  // Structural equality on canonical forms.
  CHECK(((one - Q * Q) / (one + Q)) == (one - Q));
}

TEST_CASE("derivation") {
  CHECK(Q.d_dt() == -(Q / Scalar(2L)));
  CHECK((one - Q * Q).d_dt() == Q * Q);
  CHECK((one / (one + Q * Q)).d_dt() == (Q * Q) / ((one + Q * Q) * (one + Q * Q)));
  CHECK(T.d_dt() == one);
  // Quotient rule on a composite value.
  const Scalar f = (T * Q) / (one - Q);
  const Scalar expect =
      (Q - (Scalar(Rat(1, 2)) * T * Q)) * (one - Q) - (T * Q) * (Q / Scalar(2L));
  CHECK(f.d_dt() == expect / ((one - Q) * (one - Q)));
}

TEST_CASE("eval") {
  CHECK(Scalar::q().eval(Rat(0), 64).to_double() == doctest::Approx(1.0));
  const Scalar gamma1 = -(T * Q * Q) / (one - Q * Q);
  const double v = gamma1.eval(Rat(1), 128).to_double();
  CHECK(v == doctest::Approx(-0.5819767068693265).epsilon(1e-12));
  // 1 - Q^2 evaluates to 1 - exp(-t0).
  const BigFloat lhs = (one - Q * Q).eval(Rat(7, 10), 128);
  const BigFloat rhs =
      BigFloat::from_long(1, 160) - exp_rat(Rat(-7, 10), 160);
  CHECK((lhs - rhs).abs().to_double() < 1e-30);
}

TEST_CASE("eval domain errors") {
  CHECK_THROWS_AS(Q.eval(Rat(1), 32), DomainError);
  CHECK_THROWS_AS(Q.eval(Rat(-1), 128), DomainError);
  // Pole of 1/(1-Q^2) at t = 0.
  CHECK_THROWS_AS((one / (one - Q * Q)).eval(Rat(0), 128), PoleError);
  CHECK_THROWS_AS((one / (one - Q)).subst_q(Rat(1)), PoleError);
}

TEST_CASE("substitution at Q = 0") {
  const Scalar s = (T * Q * Q + T) / (one + Q);
  CHECK(s.subst_q(Rat(0)) == T);
}

TEST_CASE("parse and render") {
  const Scalar g2 = Scalar(-1L) + Scalar(4L) * Q.pow(2) -
                    (Scalar(3L) + Scalar(2L) * T) * Q.pow(4);
  CHECK(Scalar::parse(g2.str()) == g2);
  CHECK(Scalar::parse("(-1 + 4*Q^2 - (3 + 2*t)*Q^4)") == g2);
  CHECK(Scalar::parse("1/2 * t^2") == Scalar(Rat(1, 2)) * T * T);
  CHECK(Scalar::parse("Q^-2") == Q.pow(-2));
  CHECK_THROWS_AS(Scalar::parse("1 + + Q"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1 + Q)"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
}

}  // TEST_SUITE
