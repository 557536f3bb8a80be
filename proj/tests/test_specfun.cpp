#include <doctest.h>

#include "freeprob/error.hpp"
#include "freeprob/specfun.hpp"

using namespace freeprob;

TEST_SUITE("specfun") {

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rat(0), 0) == 1);
  CHECK(pochhammer(Rat(0), 3) == 0);
  CHECK(pochhammer(Rat(-3), 2) == 6);
  CHECK(pochhammer(Rat(-5), 3) / factorial(3) == Rat(-10));
  CHECK(pochhammer(Rat(1, 2), 2) == Rat(3, 4));
}

TEST_CASE("laguerre with symbolic argument") {
  const Scalar x = Scalar::t();
  CHECK(laguerre(0, Scalar(1L), x) == Scalar(1L));
  CHECK(laguerre(1, Scalar(1L), x) == Scalar(2L) - x);
  CHECK(laguerre(2, Scalar(1L), x) ==
        Scalar(3L) - Scalar(3L) * x + Scalar(Rat(1, 2)) * x * x);
  // Scaled argument as used by the moment formula.
  const Scalar arg = Scalar(3L) * Scalar::t();
  CHECK(laguerre(2, Scalar(1L), arg) ==
        Scalar(3L) - Scalar(9L) * Scalar::t() +
            Scalar(Rat(9, 2)) * Scalar::t() * Scalar::t());
}

TEST_CASE("laguerre with symbolic index") {
  // Q-dependent index is accepted; degree 1 keeps it legible.
  const Scalar alpha = Scalar::q();
  const Scalar x = Scalar::t();
  CHECK(laguerre(1, alpha, x) == alpha + Scalar(1L) - x);
}

TEST_CASE("charlier") {
  CHECK(charlier(0, Rat(7), Rat(2)) == 1);
  CHECK_THROWS_AS(charlier(2, Rat(1), Rat(0)), DomainError);
  // Relation to Laguerre at n = 3, x = -2, a = 1/2.
  const Rat lhs = pow_rat(Rat(-1, 2), 3) / factorial(3) * charlier(3, Rat(-2), Rat(1, 2));
  Rat rhs;
  REQUIRE(laguerre(3, Scalar(Rat(-5)), Scalar(Rat(1, 2))).is_rational(&rhs));
  CHECK(lhs == rhs);
}

TEST_CASE("terminating hypergeometric sums") {
  CHECK(hyper_pfq({Rat(-1), Rat(2)}, {Rat(3)}, Rat(1)) == Rat(1, 3));
  // 1F0(-n;;z) = (1-z)^n.
  CHECK(hyper_pfq({Rat(-3)}, {}, Rat(2)) == Rat(-1));
  CHECK_THROWS_AS(hyper_pfq({Rat(1, 2)}, {Rat(1)}, Rat(1)), DomainError);
  // Lower parameter pole before termination.
  CHECK_THROWS_AS(hyper_pfq({Rat(-3)}, {Rat(-1)}, Rat(1)), DomainError);
  // Lower nonpositive integer at or beyond the terminating index is fine.
  CHECK(hyper_pfq({Rat(-1)}, {Rat(-1)}, Rat(1)) == Rat(2));
}

}  // TEST_SUITE
