#pragma once

#include <string>

#include "freeprob/coeff_table.hpp"
#include "freeprob/series.hpp"

namespace freeprob {

/// phi(u_{c t}^k): spectral moments of the free unitary Brownian motion at
/// time c*t.  Negative k by conjugation symmetry; k*c must be an integer so
/// that the exponential prefactor stays a Q-power.
Scalar fubm_moment(long k, const Rat& time_scale = Rat(1));

/// Closed-form free cumulant Q^n (-n t)^(n-1) / n!.
Scalar fubm_free_cumulant(unsigned n);

/// Even alternating star cumulants g_1..g_N generated by the quadratic
/// recursion g_n' + n g_n = -n sum g_m g_{n-m}, integrated symbolically in
/// the polynomial ring of (t, Q^2) with g_n(0) = 0.
CoeffTable g_table(int N);

/// Odd alternating star cumulants h_0..h_N, derived from the g-table through
/// 2 h_0 h_{n-1} = (1/n) g_n' - sum_{j=1}^{n-2} h_j h_{n-1-j}.
CoeffTable h_table(int N);

/// Companion polynomial of the inverse-characteristic expansion:
/// P_{k-1}^{(n)}(t) = sum_{m=0}^{k-1} (-2)^m (2n)_m / m! L_{k-1-m}^{(m+1)}(2kt).
Scalar p_poly(unsigned k, unsigned n);

/// Map whose local inverse at z = 1 carries the even-cumulant flow:
/// chi(z) = z^2 (1-z^2) e^{tz} / [(1+z) - (1-z) e^{tz}]^2, expanded around
/// z = 1 as a series in w = z - 1.
Series chi_expansion(int order);

/// Taylor coefficients a_n of the local inverse of chi: closed binomial form
/// and independent series-reversion route.
CoeffTable a_table_closed(int N);
CoeffTable a_table_oracle(int N);

/// Exact two-sided comparison report for an integral identity.
struct IntegralRepReport {
  Scalar lhs;
  Scalar rhs;
  bool match = false;
  /// rhs / lhs when both sides are nonzero and differ.
  Scalar ratio;
  std::string note;
};

/// P_{k-1}^{(n)}(t) = (1/Gamma(2n)) Int_0^inf e^{-x} x^{2n-1}
/// L_{k-1}^{(1)}(2kt+2x) dx, integrated exactly term by term.
IntegralRepReport p_gamma_integral_identity(unsigned n, unsigned k);

/// The moment-integral representation
///   e^{-kt}/n P_{k-1}^{(n)}(t) =? 2 k t^{2n}/(2n)! Int_0^inf x^{2n-1}
///   phi(u_{2(t+x)}^k) dx,
/// evaluated exactly on both sides; the report carries the exact ratio.
IntegralRepReport p_integral_representation(unsigned n, unsigned k);

/// Exact check of -(1/n) g_n' = (1/4) [2 a_n + sum_{m} a_m a_{n-m}].
bool eac_identity(int n, const CoeffTable& g, const CoeffTable& a);

}  // namespace freeprob
