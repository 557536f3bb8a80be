#include "freeprob/specfun.hpp"

#include "freeprob/error.hpp"

namespace freeprob {

Rat pochhammer(const Rat& a, unsigned k) {
  Rat acc(1);
  Rat f = a;
  for (unsigned i = 0; i < k; ++i) {
    acc *= f;
    f += 1;
  }
  return acc;
}

Scalar pochhammer_s(const Scalar& a, unsigned k) {
  Scalar acc(1L);
  Scalar f = a;
  for (unsigned i = 0; i < k; ++i) {
    acc *= f;
    f += Scalar(1L);
  }
  return acc;
}

std::vector<Scalar> laguerre_coeffs(unsigned n, const Scalar& alpha) {
  std::vector<Scalar> c(n + 1);
  const Rat nfact = factorial(n);
  for (unsigned j = 0; j <= n; ++j) {
    // (-n)_j / j! = (-1)^j C(n, j)
    Rat front = binomial(static_cast<long>(n), static_cast<long>(j));
    if (j % 2) front = -front;
    c[j] = Scalar(front / nfact) *
           pochhammer_s(alpha + Scalar(static_cast<long>(j) + 1), n - j);
  }
  return c;
}

Scalar laguerre(unsigned n, const Scalar& alpha, const Scalar& x) {
  const std::vector<Scalar> c = laguerre_coeffs(n, alpha);
  // Horner from the top.
  Scalar acc = c[n];
  for (unsigned j = n; j-- > 0;) acc = acc * x + c[j];
  return acc;
}

Rat charlier(unsigned n, const Rat& x, const Rat& a) {
  if (sgn(a) == 0) throw DomainError("charlier: parameter a must be nonzero");
  const Rat z = Rat(-1) / a;
  Rat acc(0);
  Rat term(1);
  for (unsigned m = 0; m <= n; ++m) {
    acc += term;
    // term_{m+1} = term_m * (-n+m)(-x+m) * z / (m+1)
    term *= (Rat(-static_cast<long>(n)) + static_cast<long>(m)) *
            (Rat(-x) + static_cast<long>(m)) * z;
    term /= static_cast<long>(m) + 1;
  }
  return acc;
}

Rat hyper_pfq(const std::vector<Rat>& upper, const std::vector<Rat>& lower,
              const Rat& z) {
  long stop = -1;
  for (const Rat& a : upper) {
    if (is_integer(a) && sgn(a) <= 0) {
      const long m = -a.get_num().get_si();
      if (stop < 0 || m < stop) stop = m;
    }
  }
  if (stop < 0)
    throw DomainError("hyper_pfq: no nonpositive-integer upper parameter (non-terminating)");
  for (const Rat& b : lower) {
    if (is_integer(b) && sgn(b) <= 0) {
      const long m = -b.get_num().get_si();
      if (m < stop)
        throw DomainError("hyper_pfq: lower parameter " + rat_str(b) +
                          " hits a pole before termination");
    }
  }
  Rat acc(0);
  Rat term(1);
  for (long m = 0; m <= stop; ++m) {
    acc += term;
    if (m == stop) break;
    Rat ratio(1);
    for (const Rat& a : upper) ratio *= a + m;
    for (const Rat& b : lower) ratio /= b + m;
    term *= ratio * z;
    term /= m + 1;
  }
  return acc;
}

}  // namespace freeprob
