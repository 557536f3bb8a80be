#include "freeprob/schur.hpp"

#include "freeprob/error.hpp"
#include "freeprob/jacobi.hpp"
#include "freeprob/specfun.hpp"

namespace freeprob {

Series herglotz_series(int order) {
  return Series::constant(Scalar(1L), order) +
         u_series(order, Rat(1)).scaled(Scalar(2L));
}

bool xi_inverse_identity(int order) {
  const Series h = herglotz_series(order);
  Series a = h;
  a.at(0) = Scalar();  // H - 1, zero constant term
  // e^{tH/2} = e^{t/2} e^{t(H-1)/2} = Q^{-1} exp((t/2)(H-1)).
  const Series expo = series_exp(a.scaled(Scalar::t() / Scalar(2L)));
  const Series two = Series::constant(Scalar(2L), order);
  const Series xi = (a / (a + two)) * expo.scaled(Scalar::q_pow(-1));
  return xi == Series::z(order);
}

Series f0_closed(int order) {
  Series f(order);
  f.at(0) = Scalar::q_pow(1);
  const Scalar mtq = -(Scalar::t() * Scalar::q_pow(1));
  for (int j = 1; j <= order; ++j)
    f.at(j) = mtq * Scalar::q_pow(j) *
              laguerre(static_cast<unsigned>(j) - 1, Scalar(1L),
                       Scalar(static_cast<long>(j) + 1) * Scalar::t()) /
              Scalar(static_cast<long>(j));
  return f;
}

Series f0_from_herglotz(int order) {
  const Series h = herglotz_series(order + 1);
  Series a = h;
  a.at(0) = Scalar();
  const Series two = Series::constant(Scalar(2L), order + 1);
  return ((a / (a + two))).div_z(1);
}

Series exp_ku_closed(unsigned k, int order) {
  Series f(order);
  f.at(0) = Scalar(1L);
  if (k == 0) return f;
  const Scalar mkt = Scalar(-static_cast<long>(k)) * Scalar::t();
  for (int j = 1; j <= order; ++j)
    f.at(j) = mkt * Scalar::q_pow(j) *
              laguerre(static_cast<unsigned>(j) - 1, Scalar(1L),
                       Scalar(static_cast<long>(j) + static_cast<long>(k)) * Scalar::t()) /
              Scalar(static_cast<long>(j));
  return f;
}

Series f1_schur_step(int order) {
  const Series f0 = f0_closed(order + 1);
  const Scalar gamma0 = f0[0];
  Series num = f0;
  num.at(0) = Scalar();
  const Series den =
      Series::constant(Scalar(1L), order + 1) - f0.scaled(gamma0);
  return (num / den).div_z(1);
}

Scalar euler_power_sum(unsigned p) {
  Scalar s = Scalar::q_pow(2) / (Scalar(1L) - Scalar::q_pow(2));
  for (unsigned i = 0; i < p; ++i) s = -s.d_dt();
  return s;
}

Series f1_closed(int order, F1Prefactor variant) {
  const Scalar E = Scalar::q_pow(2);
  const Scalar pref =
      variant == F1Prefactor::PropositionForm
          ? Scalar::t() * E * (Scalar(1L) - Scalar::q_pow(-2))
          : Scalar::t() * E * (Scalar(1L) - E);
  Series f(order);
  for (int j = 0; j <= order; ++j) {
    // sum_{k>=1} k E^k L_j^{(1)}((j+k+1)t), closed through the Taylor
    // expansion of the Laguerre argument in k and geometric power sums.
    const Scalar base_arg = Scalar(static_cast<long>(j) + 1) * Scalar::t();
    Scalar ksum;
    Rat mfact(1);
    for (int m = 0; m <= j; ++m) {
      if (m > 0) mfact *= m;
      Rat c = Rat(1) / mfact;
      if (m % 2) c = -c;
      ksum += Scalar(Poly::monomial(Mono{m, 0}, c)) *
              laguerre(static_cast<unsigned>(j - m), Scalar(static_cast<long>(m) + 1),
                       base_arg) *
              euler_power_sum(static_cast<unsigned>(m) + 1);
    }
    f.at(j) = pref * Scalar::q_pow(j) * ksum / Scalar(static_cast<long>(j) + 1);
  }
  return f;
}

std::vector<Scalar> schur_algorithm(const Series& f, int depth) {
  if (depth < 0 || depth > f.order() - 1)
    throw DomainError("schur algorithm: depth exceeds series order - 1");
  std::vector<Scalar> gammas;
  Series cur = f;
  for (int j = 0; j <= depth; ++j) {
    const Scalar gamma = cur[0];
    gammas.push_back(gamma);
    if (j == depth) break;
    const Scalar unit = Scalar(1L) - gamma * gamma;
    if (unit.is_zero())
      throw DomainError("schur algorithm: vanishing iterate denominator "
                        "(depth exceeds available order)");
    Series num = cur;
    num.at(0) = Scalar();
    const Series den =
        Series::constant(Scalar(1L), cur.order()) - cur.scaled(gamma);
    cur = (num / den).div_z(1);
  }
  return gammas;
}

Series schur_rebuild(const std::vector<Scalar>& gammas, int order) {
  if (gammas.empty()) throw DomainError("schur rebuild: no parameters");
  Series f = Series::constant(gammas.back(), order);
  for (size_t j = gammas.size() - 1; j-- > 0;) {
    const Series zf = f.mul_z(1).truncated(order);
    const Series num = Series::constant(gammas[j], order) + zf;
    const Series den =
        Series::constant(Scalar(1L), order) + zf.scaled(gammas[j]);
    f = num / den;
  }
  return f;
}

}  // namespace freeprob
