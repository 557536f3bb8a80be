#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "freeprob/rational.hpp"

namespace freeprob {

/// Monomial exponents of t^dt * Q^dq.
struct Mono {
  int32_t dt = 0;
  int32_t dq = 0;
  friend bool operator==(const Mono&, const Mono&) = default;
};

/// Graded-lexicographic order with t ranked above Q.
/// Returns <0, 0, >0 as a < b, a == b, a > b.
inline int mono_cmp(const Mono& a, const Mono& b) {
  const long da = static_cast<long>(a.dt) + a.dq;
  const long db = static_cast<long>(b.dt) + b.dq;
  if (da != db) return da < db ? -1 : 1;
  if (a.dt != b.dt) return a.dt < b.dt ? -1 : 1;
  return 0;
}

/// Bivariate polynomial in (t, Q) with exact rational coefficients.
/// Terms are kept sorted grlex-descending with nonzero coefficients.
class Poly {
 public:
  using Term = std::pair<Mono, Rat>;

  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(long c);

  static Poly var_t();
  static Poly var_q();
  static Poly monomial(Mono m, const Rat& c);
  /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant coefficient (the (0,0) term).
  Rat constant_term() const;

  const Mono& lead_mono() const;
  const Rat& lead_coeff() const;
  int deg_t() const;
  int deg_q() const;
  int min_deg_t() const;
  int min_deg_q() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly mul_term(const Mono& m, const Rat& c) const;
  Poly mul_rat(const Rat& c) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Partial derivatives with respect to t and Q.
  Poly dt_partial() const;
  Poly dq_partial() const;

  /// Exact evaluation at rational (t0, q0).
  Rat eval_rat(const Rat& t0, const Rat& q0) const;
  /// Substitutes Q := q0, leaving a polynomial in t alone.
  Poly subst_q(const Rat& q0) const;

  /// GCD, normalized to lead coefficient 1.  gcd(0, b) = monic b.
  static Poly gcd(const Poly& a, const Poly& b);
  /// Exact division; throws Error if the division leaves a remainder.
  Poly div_exact(const Poly& d) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace freeprob
