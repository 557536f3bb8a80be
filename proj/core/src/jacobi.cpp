#include "freeprob/jacobi.hpp"

#include <algorithm>

#include "freeprob/error.hpp"
#include "freeprob/ncpart.hpp"
#include "freeprob/specfun.hpp"

namespace freeprob {

namespace {

// Int_0^inf x^(a+i) e^(-lambda x) dx summed against x-coefficients; local
// copy of the factorial-integral helper (kept with the Laguerre expansion
// code it serves).
Scalar exp_integral(const std::vector<Scalar>& coeffs_in_x, unsigned a,
                    const Rat& lambda) {
  Scalar acc;
  for (size_t i = 0; i < coeffs_in_x.size(); ++i) {
    if (coeffs_in_x[i].is_zero()) continue;
    const unsigned p = a + static_cast<unsigned>(i);
    acc += coeffs_in_x[i] * Scalar(factorial(p) / pow_rat(lambda, static_cast<long>(p) + 1));
  }
  return acc;
}

std::vector<Scalar> compose_affine(const std::vector<Scalar>& c, const Scalar& A,
                                   const Scalar& B) {
  std::vector<Scalar> r = {c.back()};
  for (size_t j = c.size() - 1; j-- > 0;) {
    std::vector<Scalar> next(r.size() + 1);
    for (size_t i = 0; i < r.size(); ++i) {
      next[i] += r[i] * A;
      next[i + 1] += r[i] * B;
    }
    next[0] += c[j];
    r = std::move(next);
  }
  return r;
}

// Iterated t-derivatives of (1 + Q^2)^(-n), cached per call site.
std::vector<Scalar> base_derivatives(unsigned n, unsigned up_to) {
  std::vector<Scalar> d;
  d.reserve(up_to + 1);
  d.push_back(Scalar(1L) / (Scalar(1L) + Scalar::q_pow(2)).pow(static_cast<long>(n)));
  for (unsigned k = 1; k <= up_to; ++k) d.push_back(d.back().d_dt());
  return d;
}

}  // namespace

Series u_series(int order, const Rat& time_scale) {
  Series u(order);
  for (int k = 1; k <= order; ++k) u.at(k) = fubm_moment(k, time_scale);
  return u;
}

Series u_power_closed(unsigned m, int order, const Rat& time_scale) {
  Series s(order);
  if (m == 0) {
    s.at(0) = Scalar(1L);
    return s;
  }
  for (int j = static_cast<int>(m); j <= order; ++j) {
    const Rat e = time_scale * j;
    if (!is_integer(e))
      throw DomainError("u power: time scale breaks Q-power integrality");
    const Scalar arg = Scalar(e) * Scalar::t();
    s.at(j) = Scalar(make_rat(static_cast<long>(m), static_cast<long>(j))) * Scalar::q_pow(e.get_num().get_si()) *
              laguerre(static_cast<unsigned>(j) - m, Scalar(static_cast<long>(m)), arg);
  }
  return s;
}

Scalar s_coeff(unsigned k) {
  if (k < 1) throw DomainError("s coefficient: k starts at 1");
  return laguerre(k - 1, Scalar(1L), Scalar(static_cast<long>(k)) * Scalar::t()) /
         Scalar(static_cast<long>(k));
}

bool convolution_identity(unsigned m, unsigned j) {
  if (m < 1 || j < m) throw DomainError("convolution identity needs 1 <= m <= j");
  Series s(static_cast<int>(j));
  for (unsigned k = 1; k <= j; ++k) s.at(static_cast<int>(k)) = s_coeff(k);
  const Scalar lhs = s.pow(m)[static_cast<int>(j)];
  const Scalar rhs = Scalar(make_rat(static_cast<long>(m), static_cast<long>(j))) *
                     laguerre(j - m, Scalar(static_cast<long>(m)),
                              Scalar(static_cast<long>(j)) * Scalar::t());
  return lhs == rhs;
}

bool convolution_derivative_identity(unsigned k) {
  if (k < 2) throw DomainError("derivative identity needs k >= 2");
  const Scalar lhs = s_coeff(k).d_dt() * Scalar(Rat(-1, k));
  Scalar sum;
  for (unsigned j = 1; j <= k - 1; ++j) sum += s_coeff(j) * s_coeff(k - j);
  return lhs == sum * Scalar(Rat(1, 2));
}

Series m_series_direct(int order) {
  const Series u = u_series(order, Rat(2));
  const Series alpha = alpha_series(order);
  const Series herglotz =
      Series::constant(Scalar(1L), order) + compose(u, alpha).scaled(Scalar(2L));
  Series one_minus_z(order);
  one_minus_z.at(0) = Scalar(1L);
  if (order >= 1) one_minus_z.at(1) = Scalar(-1L);
  return binom_pow(one_minus_z, Rat(-1, 2)) * herglotz;
}

Series m_series_moments(int order) {
  Series m(order);
  m.at(0) = Scalar(1L);
  for (int n = 1; n <= order; ++n) {
    Scalar acc;
    const Rat nfact = factorial(static_cast<unsigned long>(n));
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        const int c = n - a - b;
        const Rat mult = nfact / (factorial(static_cast<unsigned long>(a)) *
                                  factorial(static_cast<unsigned long>(b)) *
                                  factorial(static_cast<unsigned long>(c))) *
                         pow_rat(Rat(2), c);
        acc += Scalar(mult) * fubm_moment(a - b, Rat(2));
      }
    m.at(n) = Scalar(pow_rat(Rat(1, 4), n)) * acc;
  }
  return m;
}

CoeffTable b_table_oracle(int N) {
  if (N < 1 || N > 16) throw DomainError("b table: order out of range");
  const Series w = m_series_direct(N - 1).mul_z(1);  // z M(z), order N
  const Series f = revert(w);
  CoeffTable b;
  b.label = "b";
  b.route = "oracle";
  for (int n = 1; n <= N; ++n) b.entries.push_back(f[n]);
  return b;
}

CoeffTable b_table_closed(int N, BVariant variant) {
  if (N < 1 || N > 16) throw DomainError("b table: order out of range");
  CoeffTable b;
  b.label = "b";
  b.route = "closed-form";
  const Rat shift = variant == BVariant::AsPrinted ? Rat(1) : Rat(-1);
  for (int n = 1; n <= N; ++n) {
    Scalar acc;
    for (int j = 0; j <= n - 1; ++j) {
      const Rat base = (shift - n) / 2;  // ((1-n)/2 or (-1-n)/2)
      const Rat outer = pochhammer(base, static_cast<unsigned>(n - 1 - j)) /
                        (pow_rat(Rat(4), j) * factorial(static_cast<unsigned long>(n - 1 - j)));
      Scalar inner;
      for (int k = 0; k <= j; ++k)
        inner += q_poly(static_cast<unsigned>(k), static_cast<unsigned>(n)) *
                 Scalar(binomial(2L * j, static_cast<long>(j - k))) * Scalar::q_pow(2 * k);
      acc += Scalar(outer) * inner;
    }
    b.entries.push_back(acc / Scalar(static_cast<long>(n)));
  }
  return b;
}

Scalar q_poly(unsigned j, unsigned n) {
  if (j == 0) return Scalar(1L);
  Scalar acc;
  const Scalar arg = Scalar(2L * j) * Scalar::t();
  for (unsigned m = 1; m <= j; ++m) {
    const Rat c = pochhammer(Rat(static_cast<long>(n)), m) / factorial(m - 1) *
                  pow_rat(Rat(-2), m);
    acc += Scalar(c) * laguerre(j - m, Scalar(static_cast<long>(m)), arg);
  }
  return acc / Scalar(static_cast<long>(j));
}

IntegralRepReport q_integral_representation(unsigned n, unsigned k) {
  IntegralRepReport rep;
  rep.lhs = Scalar::q_pow(2 * k) * q_poly(k, n) / Scalar(static_cast<long>(n));
  const auto lx = compose_affine(laguerre_coeffs(k - 1, Scalar(1L)),
                                 Scalar(2L * k) * Scalar::t(), Scalar(2L * k));
  const Scalar integral = Scalar::q_pow(2 * k) *
                          exp_integral(lx, n, Rat(static_cast<long>(k))) /
                          Scalar(static_cast<long>(k));
  rep.rhs = Scalar(Poly::monomial(Mono{static_cast<int>(n) + 1, 0},
                                  Rat(-2) / factorial(n))) *
            integral;
  rep.match = rep.lhs == rep.rhs;
  if (!rep.match && !rep.lhs.is_zero()) {
    rep.ratio = rep.rhs / rep.lhs;
    const Scalar tk = (Scalar::t() / Scalar(static_cast<long>(k))).pow(static_cast<long>(n) + 1);
    rep.note = rep.ratio == tk
                   ? "rhs = (t/k)^(n+1) * lhs; the stated constant should read -2 k^(n+1)/n!"
                   : "mismatch with unexpected ratio";
  } else {
    rep.note = "exact match";
  }
  return rep;
}

namespace {
Rat hyper_remark_direct(unsigned n, unsigned k) {
  Rat acc(0);
  for (unsigned j = k; j <= n - 1; ++j)
    acc += pochhammer(Rat(1 - static_cast<long>(n)) / 2, n - 1 - j) /
           (pow_rat(Rat(4), j) * factorial(n - 1 - j)) *
           binomial(2L * j, static_cast<long>(j - k));
  return acc;
}
}  // namespace

bool hyper_remark_identity(unsigned n, unsigned k) {
  if (n < 1 || k > n - 1) throw DomainError("hyper remark: need 0 <= k <= n-1");
  const long nn = static_cast<long>(n), kk = static_cast<long>(k);
  const Rat f32 = hyper_pfq({Rat(1 - kk - nn), Rat(1 + kk - nn), Rat(1 - nn) / 2},
                            {Rat(1 - nn), Rat(3, 2) - nn}, Rat(1));
  const Rat closed = binomial(2 * nn - 2, nn - 1 - kk) / pow_rat(Rat(4), nn - 1) * f32;
  return hyper_remark_direct(n, k) == closed;
}

bool hyper_remark_identity_2f1(unsigned n) {
  if (n < 1) throw DomainError("hyper remark: n >= 1");
  const long nn = static_cast<long>(n);
  const Rat f21 =
      hyper_pfq({Rat(1 - nn), Rat(1 - nn) / 2}, {Rat(3, 2) - nn}, Rat(1));
  const Rat closed = binomial(2 * nn - 2, nn - 1) / pow_rat(Rat(4), nn - 1) * f21;
  return hyper_remark_direct(n, 0) == closed;
}

Scalar h_poly(unsigned m, unsigned n, HVariant variant) {
  if (n < 1) throw DomainError("h poly: n >= 1");
  const auto deriv = base_derivatives(n, m);
  Scalar acc;
  for (unsigned k = 0; k <= m; ++k) {
    Rat c = binomial(static_cast<long>(m), static_cast<long>(k)) *
            pochhammer(Rat(static_cast<long>(n)), m - k) * pow_rat(Rat(2), k);
    if (variant == HVariant::SignCorrected && k % 2) c = -c;
    acc += Scalar(Poly::monomial(Mono{static_cast<int>(k), 0}, c)) * deriv[k];
  }
  Rat front = Rat(1) / factorial(m);
  if (m % 2) front = -front;
  return Scalar(front) * acc;
}

Series g_series_direct(unsigned n, int order) {
  // 1 / [(1+z)^n (1 + Q^2 e^{-2tz})^n] with e^{-2tz} expanded as a series.
  Series expo(order);
  Rat mfact(1);
  for (int m = 0; m <= order; ++m) {
    if (m > 0) mfact *= m;
    Rat c = pow_rat(Rat(2), m) / mfact;
    if (m % 2) c = -c;
    expo.at(m) = Scalar(Poly::monomial(Mono{m, 0}, c));
  }
  Series one_plus_z(order);
  one_plus_z.at(0) = Scalar(1L);
  if (order >= 1) one_plus_z.at(1) = Scalar(1L);
  const Series denom =
      one_plus_z.pow(n) *
      (Series::constant(Scalar(1L), order) + expo.scaled(Scalar::q_pow(2))).pow(n);
  return Series::constant(Scalar(1L), order) / denom;
}

Rat d_coeff_printed(unsigned j, unsigned n) {
  Rat acc(0);
  const long nn = static_cast<long>(n);
  for (unsigned k = 0; k <= j; ++k)
    acc += pochhammer(Rat(-nn - 1), k) / factorial(k) *
           pochhammer(Rat(2 * nn + 1), j - k) / factorial(j - k);
  return acc;
}

Rat d_coeff_series(unsigned j, unsigned n) {
  // [z^j] (1-z)^(n+1) (1+z)^(-(2n+1))
  const long nn = static_cast<long>(n);
  Rat acc(0);
  for (unsigned k = 0; k <= j; ++k) {
    Rat a = binomial(nn + 1, static_cast<long>(k));
    if (k % 2) a = -a;
    Rat b = binomial(2 * nn + static_cast<long>(j - k), static_cast<long>(j - k));
    if ((j - k) % 2) b = -b;
    acc += a * b;
  }
  return acc;
}

Scalar v_coeff(unsigned j, unsigned n, HVariant variant) {
  if (j == 0)
    return Scalar(pow_rat(Rat(2), static_cast<long>(n))) * h_poly(0, n, variant);
  Scalar acc;
  const Scalar arg = Scalar(2L * j) * Scalar::t();
  for (unsigned m = 1; m <= j; ++m)
    acc += Scalar(static_cast<long>(m)) * h_poly(m, n, variant) *
           laguerre(j - m, Scalar(static_cast<long>(m)), arg);
  return Scalar(pow_rat(Rat(2), static_cast<long>(n)) / Rat(static_cast<long>(j))) *
         Scalar::q_pow(2 * j) * acc;
}

CoeffTable c_table_oracle(int N) {
  if (N < 1 || N > 16) throw DomainError("c table: order out of range");
  Series m = m_series_direct(N);
  m.at(0) = Scalar();  // M - 1
  const Series inv = revert(m);
  CoeffTable c;
  c.label = "c";
  c.route = "oracle";
  for (int n = 1; n <= N; ++n) c.entries.push_back(inv[n]);
  return c;
}

CoeffTable c_table_closed(int N, CVariant variant) {
  if (N < 1 || N > 16) throw DomainError("c table: order out of range");
  const HVariant hv =
      variant == CVariant::Corrected ? HVariant::SignCorrected : HVariant::AsPrinted;
  CoeffTable c;
  c.label = "c";
  c.route = "closed-form";
  for (int n = 1; n <= N; ++n) {
    // Cache V_0..V_{n-1} for this n.
    std::vector<Scalar> V;
    for (unsigned j = 0; j < static_cast<unsigned>(n); ++j)
      V.push_back(v_coeff(j, static_cast<unsigned>(n), hv));
    auto dc = [&](unsigned j) {
      return variant == CVariant::Corrected ? d_coeff_series(j, static_cast<unsigned>(n))
                                            : d_coeff_printed(j, static_cast<unsigned>(n));
    };
    Scalar acc;
    for (int j = 0; j <= n - 1; ++j) {
      Scalar inner;
      for (int k = 0; k <= j; ++k) {
        const Scalar& vterm =
            variant == CVariant::AsPrinted ? V[static_cast<size_t>(j)] : V[static_cast<size_t>(k)];
        inner += Scalar(dc(static_cast<unsigned>(j - k))) * vterm;
      }
      acc += Scalar(binomial(2L * n - 2, static_cast<long>(n - 1 - j))) * inner;
    }
    c.entries.push_back(Scalar(Rat(1, n) / pow_rat(Rat(4), n - 1)) * acc);
  }
  return c;
}

CoeffTable s_transform(int N) {
  const CoeffTable c = c_table_oracle(N + 1);
  CoeffTable s;
  s.label = "S";
  s.first_index = 0;
  s.route = "oracle";
  s.entries.push_back(c.at_index(1));
  for (int n = 1; n <= N; ++n)
    s.entries.push_back(c.at_index(n + 1) + c.at_index(n));
  return s;
}

Series r_series(int N) {
  const CoeffTable b = b_table_oracle(N + 1);
  Series f_over_z(N);
  for (int n = 0; n <= N; ++n) f_over_z.at(n) = b.at_index(n + 1);
  const Series r = Series::constant(Scalar(1L), N) / f_over_z;
  return r - Series::constant(Scalar(1L), N);
}

CoeffTable jacobi_cumulants_r(int N) {
  const Series r = r_series(N);
  CoeffTable k;
  k.label = "kappa";
  k.route = "oracle";
  for (int n = 1; n <= N; ++n) k.entries.push_back(r[n]);
  return k;
}

CoeffTable jacobi_cumulants_moebius(int N) {
  const Series m = m_series_moments(N);
  CoeffTable k;
  k.label = "kappa";
  k.route = "oracle";
  for (int n = 1; n <= N; ++n) {
    const auto& all = enumerate_nc(n);
    const auto& mob = nc_mobius_to_top(n);
    Scalar acc;
    for (size_t i = 0; i < all.size(); ++i) {
      if (mob[i] == 0) continue;
      Scalar prod(mob[i]);
      for (const auto& block : all[i].blocks)
        prod *= m[static_cast<int>(block.size())];
      acc += prod;
    }
    k.entries.push_back(acc);
  }
  return k;
}

CoeffTable jacobi_cumulants_star(int N) {
  const MomentOracle oracle = fubm_oracle(Rat(2));
  CoeffTable k;
  k.label = "kappa";
  k.route = "oracle";
  for (int n = 1; n <= N; ++n) {
    Scalar acc;
    std::vector<int> word(static_cast<size_t>(n));
    for (long mask = 0; mask < (1L << n); ++mask) {
      for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
      acc += mixed_cumulant(oracle, word);
    }
    acc = acc * Scalar(pow_rat(Rat(1, 4), n));
    if (n == 1) acc += Scalar(Rat(1, 2));
    k.entries.push_back(acc);
  }
  return k;
}

}  // namespace freeprob
