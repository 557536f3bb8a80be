#pragma once

#include <gmpxx.h>

#include <string>

namespace freeprob {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int factorial_int(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Rat factorial(unsigned long n) { return Rat(factorial_int(n)); }

/// binomial(n, k) for integer n (possibly negative), k >= 0.
inline Rat binomial(long n, long k) {
  if (k < 0) return Rat(0);
  if (n >= 0) {
    if (k > n) return Rat(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rat(b);
  }
  // (-n choose k) via the falling factorial.
  Rat acc(1);
  for (long i = 0; i < k; ++i) acc *= Rat(n - i);
  return acc / factorial(static_cast<unsigned long>(k));
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  bool inv = e < 0;
  unsigned long m = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat acc(1);
  while (m) {
    if (m & 1) acc *= b;
    b *= b;
    m >>= 1;
  }
  if (inv) return Rat(1) / acc;
  return acc;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Parses "p", "p/q" or a plain decimal like "0.25" into an exact rational.
Rat parse_rat(const std::string& text);

}  // namespace freeprob
