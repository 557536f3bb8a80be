#pragma once

#include "freeprob/brownian.hpp"
#include "freeprob/coeff_table.hpp"
#include "freeprob/series.hpp"

namespace freeprob {

/// Moment generating series U of the free unitary Brownian motion at time
/// scale c (coefficient of z^k is phi(u_{ct}^k), constant term 0).
Series u_series(int order, const Rat& time_scale = Rat(2));

/// Closed form for the m-th power of U at time scale c:
/// [U]^m = m sum_{j>=m} L_{j-m}^{(m)}(c j t) (Q^c z)^j / j.
Series u_power_closed(unsigned m, int order, const Rat& time_scale = Rat(2));

/// s_k(t) = L_{k-1}^{(1)}(kt)/k, the exponentially rescaled moment.
Scalar s_coeff(unsigned k);

/// Compositional convolution identity
///   sum_{j_1+...+j_m=j} s_{j_1} ... s_{j_m} = (m/j) L_{j-m}^{(m)}(jt).
bool convolution_identity(unsigned m, unsigned j);

/// Derivative form -(1/k) s_k' = (1/2) sum_{j=1}^{k-1} s_j s_{k-j}.
bool convolution_derivative_identity(unsigned k);

/// Moment generating function of the free Jacobi process (trace-1/2
/// projection), two independent routes:
///  - direct:   (1-z)^{-1/2} [1 + 2 U(alpha(z))]
///  - moments:  multinomial expansion of ((u + u* + 2)/4)^n.
Series m_series_direct(int order);
Series m_series_moments(int order);

/// Taylor coefficients b_n of the reciprocal-R-transform series F (the
/// compositional inverse of z M(z)), by series reversion.
CoeffTable b_table_oracle(int N);

/// Closed-form b_n variants.  The binomial-sum closed form depends on the
/// base of the half-integer Pochhammer factor; AsPrinted uses (1-n)/2,
/// Corrected uses (-1-n)/2 which is the one validated by the oracle.
enum class BVariant { AsPrinted, Corrected };
CoeffTable b_table_closed(int N, BVariant variant);

/// Q_j^{(n)}(t) = (1/j) sum_{m=1}^j (n)_m/(m-1)! (-2)^m L_{j-m}^{(m)}(2jt),
/// with Q_0^{(n)} = 1.
Scalar q_poly(unsigned j, unsigned n);

/// Exact check of the stated integral representation
///   e^{-kt}/n Q_k^{(n)}(t) =? -2 t^{n+1}/n! Int_0^inf x^n phi(u_{2(t+x)}^k) dx.
IntegralRepReport q_integral_representation(unsigned n, unsigned k);

/// The binomial/hypergeometric rewriting of the inner b_n sum:
///   sum_{j=k}^{n-1} ((1-n)/2)_{n-1-j} / (4^j (n-1-j)!) C(2j, j-k)
///     = 4^{1-n} C(2n-2, n-1-k) 3F2(1-k-n, 1+k-n, (1-n)/2; 1-n, 3/2-n; 1).
bool hyper_remark_identity(unsigned n, unsigned k);
/// The k = 0 specialization against the 2F1 form.
bool hyper_remark_identity_2f1(unsigned n);

/// Taylor coefficients H_m^{(n)} of 1/[(1+z)^n (1+e^{-t(1+2z)})^n].
/// SignCorrected carries (-2t)^k against the k-th t-derivative, the variant
/// validated by the direct series expansion; AsPrinted carries (2t)^k.
enum class HVariant { AsPrinted, SignCorrected };
Scalar h_poly(unsigned m, unsigned n, HVariant variant = HVariant::SignCorrected);

/// Direct series expansion of 1/[(1+z)^n (1+e^{-t(1+2z)})^n] (the oracle
/// for h_poly).
Series g_series_direct(unsigned n, int order);

/// Coefficients of (1-z)^{n+1}/(1+z)^{2n+1}: the printed double Pochhammer
/// sum (which drops the alternating sign of the (1+z)-expansion) and the
/// true Taylor coefficients from the series itself.
Rat d_coeff_printed(unsigned j, unsigned n);
Rat d_coeff_series(unsigned j, unsigned n);

/// V_j^{(n)} = 2^n e^{-jt}/j sum_{m=1}^j m H_m^{(n)} L_{j-m}^{(m)}(2jt),
/// V_0^{(n)} = 2^n H_0^{(n)}.
Scalar v_coeff(unsigned j, unsigned n, HVariant variant = HVariant::SignCorrected);

/// Taylor coefficients c_n of the compositional inverse of M - 1.
CoeffTable c_table_oracle(int N);

/// Closed-form c_n variants:
///  - AsPrinted: inner sum sum_k d_{j-k} V_j with printed d and printed H;
///  - Cauchy:    Cauchy pairing sum_k d_{j-k} V_k, printed d and H;
///  - Corrected: Cauchy pairing with true d coefficients and sign-corrected
///               H (the combination that matches the reversion oracle).
enum class CVariant { AsPrinted, Cauchy, Corrected };
CoeffTable c_table_closed(int N, CVariant variant);

/// S-transform coefficients: S(0) = c_1, [z^n] S = c_{n+1} + c_n, built from
/// the oracle c-table.
CoeffTable s_transform(int N);

/// R-transform series of the free Jacobi process, from the b-table oracle:
/// R(z) = z / F(z) - 1.
Series r_series(int N);

/// Free cumulants of the free Jacobi process by three routes: R-transform
/// coefficients, noncrossing Moebius inversion of the moments, and the
/// averaged star-cumulant sum over sign words (time scale 2).
CoeffTable jacobi_cumulants_r(int N);
CoeffTable jacobi_cumulants_moebius(int N);
CoeffTable jacobi_cumulants_star(int N);

}  // namespace freeprob
