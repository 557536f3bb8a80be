#pragma once

#include <vector>

#include "freeprob/series.hpp"

namespace freeprob {

/// Herglotz transform of the spectral distribution: 1 + 2 sum_k phi(u_t^k) z^k.
Series herglotz_series(int order);

/// Exact check that xi(H(z)) = z as truncated series, where
/// xi(Z) = (Z-1)/(Z+1) e^{tZ/2} with the exponential expanded around Z = 1.
bool xi_inverse_identity(int order);

/// Schur function of the spectral distribution, two routes: the explicit
/// Laguerre expansion and the Herglotz definition (H-1)/((H+1) z).
Series f0_closed(int order);
Series f0_from_herglotz(int order);

/// Closed form of exp(-k t U(z)):
///   1 - kt sum_{j>=1} Q^j/j L_{j-1}^{(1)}((j+k)t) z^j.
Series exp_ku_closed(unsigned k, int order);

/// First Schur iterate by one algorithm step from f0 (the oracle route).
Series f1_schur_step(int order);

/// Closed form of the first Schur iterate.  The overall prefactor decides
/// between t e^{-t}(1 - e^{t}) (PropositionForm) and t e^{-t}(1 - e^{-t})
/// (ProofForm); the Schur-step oracle adjudicates.  The infinite k-sums are
/// closed exactly through the geometric power sums sum_k k^p E^k.
enum class F1Prefactor { PropositionForm, ProofForm };
Series f1_closed(int order, F1Prefactor variant = F1Prefactor::PropositionForm);

/// sum_{k>=1} k^p E^k as an exact rational function (E = Q^2), generated by
/// S_0 = E/(1-E), S_{p+1} = -d/dt S_p.
Scalar euler_power_sum(unsigned p);

/// Verblunsky coefficients gamma_0..gamma_depth extracted by the Schur
/// recursion z f_{j+1} = (f_j - gamma_j) / (1 - gamma_j f_j); conjugation is
/// the identity since all coefficients are real symbolic expressions.
std::vector<Scalar> schur_algorithm(const Series& f, int depth);

/// Rebuilds a Schur function from its parameters by reversing the recursion;
/// reproduces the first depth+1 coefficients of the source series.
Series schur_rebuild(const std::vector<Scalar>& gammas, int order);

}  // namespace freeprob
