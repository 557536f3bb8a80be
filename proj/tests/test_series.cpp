#include <doctest.h>

#include "freeprob/error.hpp"
#include "freeprob/series.hpp"

using namespace freeprob;

namespace {
Series geometric(int order) {
  Series s(order);
  for (int k = 0; k <= order; ++k) s.at(k) = Scalar(1L);
  return s;
}

Series one_plus_z(int order) {
  Series s(order);
  s.at(0) = Scalar(1L);
  s.at(1) = Scalar(1L);
  return s;
}
}  // namespace

TEST_SUITE("series") {

TEST_CASE("arithmetic") {
  const int N = 5;
  Series a = one_plus_z(N);
  Series b(N);
  b.at(0) = Scalar(1L);
  b.at(1) = Scalar(-1L);
  Series prod = a * b;  // 1 - z^2
  CHECK(prod[0] == Scalar(1L));
  CHECK(prod[1].is_zero());
  CHECK(prod[2] == Scalar(-1L));
  CHECK(Series::constant(Scalar(1L), N) / b == geometric(N));
  const Series cube = one_plus_z(3).pow(3);
  CHECK(cube[0] == Scalar(1L));
  CHECK(cube[1] == Scalar(3L));
  CHECK(cube[2] == Scalar(3L));
  CHECK(cube[3] == Scalar(1L));
}

TEST_CASE("mixed orders truncate to the minimum") {
  const Series a = geometric(7);
  const Series b = one_plus_z(3);
  CHECK((a * b).order() == 3);
  CHECK((a + b).order() == 3);
}

TEST_CASE("division requires an invertible constant term") {
  CHECK_THROWS_AS(geometric(3) / Series::z(3), DivisionByZeroError);
}

TEST_CASE("composition") {
  const int N = 6;
  // exp(log(1+z)) = 1 + z.
  Series expo(N), logs(N);
  Rat fact(1);
  for (int m = 0; m <= N; ++m) {
    if (m > 0) fact *= m;
    expo.at(m) = Scalar(Rat(1) / fact);
    if (m > 0) {
      Rat c = Rat(1) / m;
      if (m % 2 == 0) c = -c;
      logs.at(m) = Scalar(c);
    }
  }
  CHECK(compose(expo, logs) == one_plus_z(N));
  // Geometric series composed with z/2.
  Series half(N);
  half.at(1) = Scalar(Rat(1, 2));
  const Series g = compose(geometric(N), half);
  for (int k = 0; k <= N; ++k) CHECK(g[k] == Scalar(pow_rat(Rat(1, 2), k)));
  CHECK_THROWS_AS(compose(geometric(3), one_plus_z(3)), DomainError);
}

TEST_CASE("reversion") {
  const int N = 6;
  // Moebius pair: z/(1-z) inverts to z/(1+z).
  Series f(N);
  for (int k = 1; k <= N; ++k) f.at(k) = Scalar(1L);
  const Series g = revert(f);
  for (int k = 1; k <= N; ++k) {
    Rat c(1);
    if (k % 2 == 0) c = -c;
    CHECK(g[k] == Scalar(c));
  }
  CHECK_THROWS_AS(revert(Series::z(4) * Series::z(4)), DomainError);
  Series bad(4);
  bad.at(0) = Scalar(1L);
  CHECK_THROWS_AS(revert(bad), DomainError);
}

TEST_CASE("square root and fractional powers") {
  const int N = 6;
  Series one_minus_z(N);
  one_minus_z.at(0) = Scalar(1L);
  one_minus_z.at(1) = Scalar(-1L);
  const Series r = series_sqrt(one_minus_z);
  CHECK(r * r == one_minus_z);
  CHECK_THROWS_AS(series_sqrt(Series::constant(Scalar(4L), 3)), DomainError);
  // (1-z)^(-1/2) * (1-z)^(1/2) = 1.
  const Series inv = binom_pow(one_minus_z, Rat(-1, 2));
  CHECK(inv * r == Series::constant(Scalar(1L), N));
}

TEST_CASE("alpha series") {
  const Series a = alpha_series(5);
  CHECK(a[0].is_zero());
  CHECK(a[1] == Scalar(Rat(1, 4)));
  CHECK(a[2] == Scalar(Rat(1, 8)));
  CHECK(a[3] == Scalar(Rat(5, 64)));
}

TEST_CASE("binomial transform basis rows") {
  Series e0(4), e1(4);
  e0.at(0) = Scalar(1L);
  e1.at(1) = Scalar(1L);
  const Series p0 = brown_transform(e0);
  const Series p1 = brown_transform(e1);
  for (int n = 0; n <= 4; ++n) {
    CHECK(p0[n] == Scalar(binomial(2L * n, n)));
    CHECK(p1[n] == Scalar(binomial(2L * n, n - 1)));
  }
}

}  // TEST_SUITE
