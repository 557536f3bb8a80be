#pragma once

#include <mpfr.h>

#include <string>

#include "freeprob/rational.hpp"

namespace freeprob {

/// Thin RAII wrapper around an mpfr_t with round-to-nearest semantics.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_rat(const Rat& r, mpfr_prec_t prec);
  static BigFloat from_long(long v, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  BigFloat exp() const;
  BigFloat abs() const;
  BigFloat pow_si(long e) const;

  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  int sgn() const { return mpfr_sgn(x_); }
  int cmp(const BigFloat& o) const { return mpfr_cmp(x_, o.x_); }
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  /// Scientific-notation decimal string with the given significant digits.
  std::string dec(int digits) const;

  /// 2^(exponent - precision); zero input yields zero.
  BigFloat ulp() const;

  /// Same value rounded to a different precision.
  BigFloat to_prec(mpfr_prec_t prec) const;

 private:
  mpfr_t x_;
};

/// exp(r) for rational r at the given precision.
BigFloat exp_rat(const Rat& r, mpfr_prec_t prec);

}  // namespace freeprob
