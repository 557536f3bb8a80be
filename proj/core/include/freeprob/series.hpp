#pragma once

#include <vector>

#include "freeprob/scalar.hpp"

namespace freeprob {

/// Truncated formal power series over Scalar.  The truncation order is
/// explicit and inclusive: a Series of order N stores coefficients 0..N.
/// Arithmetic between series of different orders truncates to the minimum.
/// All coefficients are exact; identities between series are exact
/// coefficient-wise statements in the Scalar field.
class Series {
 public:
  explicit Series(int order) : c_(static_cast<size_t>(order) + 1) {}
  explicit Series(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {}

  static Series z(int order);
  static Series constant(const Scalar& v, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  Scalar& at(int k) { return c_[static_cast<size_t>(k)]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Series truncated(int new_order) const;
  /// Coefficient-wise multiplication by a fixed Scalar.
  Series scaled(const Scalar& v) const;
  /// Substitution z -> v*z.
  Series scale_var(const Scalar& v) const;
  /// Multiplication by z^k; the order grows by k.
  Series mul_z(int k = 1) const;
  /// Division by z^k; requires the k lowest coefficients to vanish, the
  /// order drops by k.
  Series div_z(int k = 1) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  /// Division; b must have an invertible (nonzero) constant term.
  friend Series operator/(const Series& a, const Series& b);
  Series pow(unsigned e) const;

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  std::vector<Scalar> c_;
};

/// Truncated composition outer(inner); inner must have zero constant term.
/// The result carries the common (minimum) order.
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse of f (f(0) = 0, f'(0) invertible), computed by
/// order-by-order refinement and verified exactly against compose(f, g) = z
/// before returning.
Series revert(const Series& f);

/// Compositional inverse via the coefficient-extraction formula
/// g_n = [z^(n-1)] (z/f)^n / n.  Independent of revert; used as an oracle.
Series revert_lagrange(const Series& f);

/// exp(f) for f with zero constant term.
Series series_exp(const Series& f);

/// (1 + g)^a for rational a, where f = 1 + g has constant term 1, expanded
/// through rising factorials so that half-integer exponents stay exact.
Series binom_pow(const Series& f, const Rat& a);

/// Square root with branch fixed by sqrt(1) = 1; constant term must be 1.
Series series_sqrt(const Series& f);

/// Taylor expansion at 0 of w -> (1 - sqrt(1-w)) / (1 + sqrt(1-w)).
Series alpha_series(int order);

/// Binomial transform p_n = sum_{k=0}^n C(2n, n-k) r_k.  Satisfies
/// sum p_n w^n / 4^n = (1-w)^{-1/2} * sum r_n alpha(w)^n, which is the
/// identity the tests pin it against.
Series brown_transform(const Series& r);

}  // namespace freeprob
