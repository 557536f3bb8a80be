#include "freeprob/brownian.hpp"

#include <algorithm>

#include "freeprob/error.hpp"
#include "freeprob/specfun.hpp"

namespace freeprob {

namespace {

// Coefficients in x of P(A + B x), given the coefficients of P.
std::vector<Scalar> compose_affine(const std::vector<Scalar>& c, const Scalar& A,
                                   const Scalar& B) {
  std::vector<Scalar> r = {c.back()};
  for (size_t j = c.size() - 1; j-- > 0;) {
    // r <- r * (A + B x) + c[j]
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

// Int_0^inf x^(a+i) e^(-lambda x) dx = (a+i)! / lambda^(a+i+1), summed over
// the x-coefficients.
Scalar exp_integral(const std::vector<Scalar>& coeffs_in_x, unsigned a,
                    const Rat& lambda) {
  Scalar acc;
  for (size_t i = 0; i < coeffs_in_x.size(); ++i) {
    if (coeffs_in_x[i].is_zero()) continue;
    const unsigned p = a + static_cast<unsigned>(i);
    const Rat weight = factorial(p) / pow_rat(lambda, static_cast<long>(p) + 1);
    acc += coeffs_in_x[i] * Scalar(weight);
  }
  return acc;
}

// Antiderivative in t of a Scalar of the shape (polynomial in t, Q) / Q^b
// whose Q-powers are all even, i.e. an exponential polynomial in (t, e^-t).
Scalar exp_poly_antiderivative(const Scalar& s) {
  if (s.is_zero()) return Scalar();
  int shift = 0;
  if (!s.den().is_one()) {
    if (!s.den().is_monomial())
      throw Error("antiderivative: denominator must be a Q-monomial");
    const Mono m = s.den().lead_mono();
    if (m.dt != 0)
      throw Error("antiderivative: denominator must be free of t");
    shift = m.dq;
  }
  Scalar acc;
  for (const auto& [m, coef] : s.num().terms()) {
    const int qe = m.dq - shift;
    if (qe % 2 != 0)
      throw Error("antiderivative: odd Q-power outside the (t, e^-t) ring");
    const long lam = -qe / 2;  // the term is t^a e^{lam t}
    const int a = m.dt;
    if (lam == 0) {
      acc += Scalar(Poly::monomial(Mono{a + 1, 0}, coef / (a + 1)));
    } else {
      // Int t^a e^{lam t} dt = e^{lam t} sum_i (-1)^i a!/((a-i)! lam^(i+1)) t^(a-i).
      Scalar p;
      const Rat lambda(lam);
      Rat fall(1);
      for (int i = 0; i <= a; ++i) {
        if (i > 0) fall *= a - i + 1;
        Rat term = fall / pow_rat(lambda, i + 1);
        if (i % 2) term = -term;
        p += Scalar(Poly::monomial(Mono{a - i, 0}, term));
      }
      acc += Scalar(coef) * p * Scalar::q_pow(qe);
    }
  }
  return acc;
}

}  // namespace

Scalar fubm_moment(long k, const Rat& time_scale) {
  if (k == 0) return Scalar(1L);
  const unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k);
  const Rat e = time_scale * static_cast<long>(m);
  if (!is_integer(e))
    throw DomainError("fubm moment: time scale " + rat_str(time_scale) +
                      " does not keep Q-powers integral at k = " + std::to_string(k));
  const Scalar arg = Scalar(e) * Scalar::t();
  return Scalar::q_pow(e.get_num().get_si()) *
         laguerre(static_cast<unsigned>(m - 1), Scalar(1L), arg) /
         Scalar(static_cast<long>(m));
}

Scalar fubm_free_cumulant(unsigned n) {
  if (n == 0) throw DomainError("free cumulant index starts at 1");
  // Q^n (-n t)^(n-1) / n!
  const Rat c = pow_rat(Rat(-static_cast<long>(n)), static_cast<long>(n) - 1) /
                factorial(n);
  return Scalar::q_pow(n) * Scalar(Poly::monomial(Mono{static_cast<int>(n) - 1, 0}, c));
}

CoeffTable g_table(int N) {
  if (N < 1 || N > 16) throw DomainError("g table: order out of range");
  CoeffTable g;
  g.label = "g";
  g.route = "closed-form";
  const Scalar E = Scalar::q_pow(2);
  g.entries.push_back(Scalar(1L) - E);
  for (int n = 2; n <= N; ++n) {
    Scalar rhs;
    for (int m = 1; m <= n - 1; ++m)
      rhs += g.entries[static_cast<size_t>(m - 1)] * g.entries[static_cast<size_t>(n - m - 1)];
    rhs = rhs * Scalar(-static_cast<long>(n));
    // (g_n e^{nt})' = rhs e^{nt}; integrate, fix the constant by g_n(0) = 0.
    const Scalar integrand = rhs * Scalar::q_pow(-2 * n);
    const Scalar W = exp_poly_antiderivative(integrand);
    const Rat K = -W.eval_rat(Rat(0), Rat(1));
    Scalar gn = (W + Scalar(K)) * Scalar::q_pow(2 * n);
    if (!gn.is_poly())
      throw Error("g table: non-polynomial residue at n = " + std::to_string(n));
    g.entries.push_back(std::move(gn));
  }
  return g;
}

CoeffTable h_table(int N) {
  if (N < 0 || N > 12) throw DomainError("h table: order out of range");
  const CoeffTable g = g_table(N + 1);
  CoeffTable h;
  h.label = "h";
  h.first_index = 0;
  h.route = "closed-form";
  h.entries.push_back(Scalar::q_pow(1));
  const Scalar twoQ = Scalar(2L) * Scalar::q_pow(1);
  for (int n = 2; n <= N + 1; ++n) {
    Scalar acc = g.at_index(n).d_dt() / Scalar(static_cast<long>(n));
    for (int j = 1; j <= n - 2; ++j)
      acc -= h.entries[static_cast<size_t>(j)] * h.entries[static_cast<size_t>(n - 1 - j)];
    h.entries.push_back(acc / twoQ);
  }
  return h;
}

Scalar p_poly(unsigned k, unsigned n) {
  if (k < 1) throw DomainError("p poly: k starts at 1");
  Scalar acc;
  const Scalar arg = Scalar(2L * k) * Scalar::t();
  for (unsigned m = 0; m < k; ++m) {
    Rat c = pochhammer(Rat(2L * n), m) / factorial(m) * pow_rat(Rat(-2), m);
    acc += Scalar(c) * laguerre(k - 1 - m, Scalar(static_cast<long>(m) + 1), arg);
  }
  return acc;
}

Series chi_expansion(int order) {
  if (order < 1) throw DomainError("chi expansion: order must be >= 1");
  // chi(1+w) = -(1/E) w (1+w)^2 (2+w) X(w) / [2 + w (1 + X(w)/E)]^2,
  // with X(w) the exponential series sum t^m w^m / m! and E = Q^2.
  Series X(order);
  Rat mfact(1);
  for (int m = 0; m <= order; ++m) {
    if (m > 0) mfact *= m;
    X.at(m) = Scalar(Poly::monomial(Mono{m, 0}, Rat(1) / mfact));
  }
  // w (1+w)^2 (2+w) = 2w + 5w^2 + 4w^3 + w^4.
  Series A(order);
  const long acoef[5] = {0, 2, 5, 4, 1};
  for (int i = 0; i <= std::min(order, 4); ++i) A.at(i) = Scalar(acoef[i]);

  const Scalar Einv = Scalar::q_pow(-2);
  const Series numer = (A * X).scaled(-Einv);
  const Series inner =
      (Series::constant(Scalar(1L), order) + X.scaled(Einv)).mul_z(1).truncated(order);
  const Series D = Series::constant(Scalar(2L), order) + inner;
  return numer / (D * D);
}

CoeffTable a_table_oracle(int N) {
  if (N < 1 || N > 16) throw DomainError("a table: order out of range");
  const Series inv = revert(chi_expansion(N));
  CoeffTable a;
  a.label = "a";
  a.route = "oracle";
  for (int n = 1; n <= N; ++n) a.entries.push_back(inv[n]);
  return a;
}

CoeffTable a_table_closed(int N) {
  if (N < 1 || N > 16) throw DomainError("a table: order out of range");
  CoeffTable a;
  a.label = "a";
  a.route = "closed-form";
  for (int n = 1; n <= N; ++n) {
    Scalar acc;
    for (int k = 1; k <= n; ++k)
      acc += Scalar(binomial(2L * n, static_cast<long>(n - k))) *
             Scalar::q_pow(2 * k) * p_poly(static_cast<unsigned>(k), static_cast<unsigned>(n));
    Rat pref = Rat(2) / n;
    if (n % 2) pref = -pref;
    a.entries.push_back(Scalar(pref) * acc);
  }
  return a;
}

IntegralRepReport p_gamma_integral_identity(unsigned n, unsigned k) {
  IntegralRepReport rep;
  rep.lhs = p_poly(k, n);
  // Expand L_{k-1}^{(1)}(2kt + 2x) in x and integrate against e^{-x} x^{2n-1}.
  const auto lx = compose_affine(laguerre_coeffs(k - 1, Scalar(1L)),
                                 Scalar(2L * k) * Scalar::t(), Scalar(2L));
  rep.rhs = exp_integral(lx, 2 * n - 1, Rat(1)) / Scalar(factorial(2 * n - 1));
  rep.match = rep.lhs == rep.rhs;
  if (!rep.match && !rep.lhs.is_zero()) rep.ratio = rep.rhs / rep.lhs;
  rep.note = rep.match ? "exact match" : "mismatch";
  return rep;
}

IntegralRepReport p_integral_representation(unsigned n, unsigned k) {
  IntegralRepReport rep;
  rep.lhs = Scalar::q_pow(2 * k) * p_poly(k, n) / Scalar(static_cast<long>(n));
  // Int x^{2n-1} phi(u_{2(t+x)}^k) dx
  //   = (Q^{2k}/k) Int x^{2n-1} e^{-kx} L_{k-1}^{(1)}(2kt + 2kx) dx.
  const auto lx = compose_affine(laguerre_coeffs(k - 1, Scalar(1L)),
                                 Scalar(2L * k) * Scalar::t(), Scalar(2L * k));
  const Scalar integral = Scalar::q_pow(2 * k) *
                          exp_integral(lx, 2 * n - 1, Rat(static_cast<long>(k))) /
                          Scalar(static_cast<long>(k));
  // Stated constant: 2 k t^{2n} / (2n)!.
  rep.rhs = Scalar(Poly::monomial(Mono{static_cast<int>(2 * n), 0},
                                  Rat(2L * k) / factorial(2 * n))) *
            integral;
  rep.match = rep.lhs == rep.rhs;
  if (!rep.match && !rep.lhs.is_zero()) {
    rep.ratio = rep.rhs / rep.lhs;
    const Scalar tk = (Scalar::t() / Scalar(static_cast<long>(k))).pow(2 * n);
    rep.note = rep.ratio == tk
                   ? "rhs = (t/k)^(2n) * lhs; the stated constant should read 2 k^(2n+1)/(2n)!"
                   : "mismatch with unexpected ratio";
  } else {
    rep.note = "exact match";
  }
  return rep;
}

bool eac_identity(int n, const CoeffTable& g, const CoeffTable& a) {
  Scalar lhs = g.at_index(n).d_dt() * Scalar(Rat(-1, n));
  Scalar sum;
  for (int m = 1; m <= n - 1; ++m) sum += a.at_index(m) * a.at_index(n - m);
  Scalar rhs = (Scalar(2L) * a.at_index(n) + sum) * Scalar(Rat(1, 4));
  return lhs == rhs;
}

}  // namespace freeprob
