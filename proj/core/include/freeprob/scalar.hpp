#pragma once

#include <string>
#include <string_view>

#include "freeprob/bigfloat.hpp"
#include "freeprob/poly.hpp"

namespace freeprob {

/// Element of the field of rational functions in (t, Q), where Q stands for
/// exp(-t/2).  The exponential meaning of Q enters only through d_dt (which
/// maps Q to -Q/2) and eval (which substitutes Q := exp(-t0/2)); field
/// arithmetic itself is plain rational-function arithmetic.
///
/// Canonical form: numerator and denominator coprime, denominator nonzero
/// with leading coefficient 1 under grlex(t > Q), zero stored as 0/1.
/// Equality of canonical forms is structural equality.
class Scalar {
 public:
  Scalar() : num_(), den_(Rat(1)) {}
  Scalar(long v) : num_(v), den_(Rat(1)) {}  // NOLINT: implicit by design
  Scalar(const Rat& v) : num_(v), den_(Rat(1)) {}  // NOLINT
  explicit Scalar(Poly p) : num_(std::move(p)), den_(Rat(1)) {}

  static Scalar t();
  static Scalar q();
  /// Q^k for any integer k (negative powers are ordinary fractions).
  static Scalar q_pow(long k);
  static Scalar from_frac(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }
  /// Exact rational value if the element is a constant.
  bool is_rational(Rat* out = nullptr) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  /// The derivation with D(t) = 1 and D(Q) = -Q/2, extended by linearity,
  /// Leibniz and quotient rules.
  Scalar d_dt() const;

  /// Substitutes Q := q0 (exact), keeping t symbolic.  Throws PoleError if
  /// the denominator vanishes identically under the substitution.
  Scalar subst_q(const Rat& q0) const;

  /// Exact evaluation at rational (t0, q0); PoleError on vanishing
  /// denominator.
  Rat eval_rat(const Rat& t0, const Rat& q0) const;

  /// Numeric evaluation at t := t0, Q := exp(-t0/2).  Requires t0 >= 0 and
  /// precision_bits >= 53.  Internally carries 32 guard bits; the result is
  /// rounded back to precision_bits.
  BigFloat eval(const Rat& t0, mpfr_prec_t precision_bits) const;

  /// Canonical textual form; parse(str()) reproduces the element exactly.
  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

inline Scalar t_var() { return Scalar::t(); }
inline Scalar q_var() { return Scalar::q(); }

std::string poly_str(const Poly& p);

}  // namespace freeprob
