#include "freeprob/series.hpp"

#include <algorithm>

#include "freeprob/error.hpp"
#include "freeprob/specfun.hpp"

namespace freeprob {

Series Series::z(int order) {
  Series s(order);
  if (order >= 1) s.at(1) = Scalar(1L);
  return s;
}

Series Series::constant(const Scalar& v, int order) {
  Series s(order);
  s.at(0) = v;
  return s;
}

Series Series::truncated(int new_order) const {
  if (new_order >= order()) return *this;
  return Series(std::vector<Scalar>(c_.begin(), c_.begin() + new_order + 1));
}

Series Series::scaled(const Scalar& v) const {
  Series out(order());
  for (int k = 0; k <= order(); ++k) out.at(k) = c_[static_cast<size_t>(k)] * v;
  return out;
}

Series Series::scale_var(const Scalar& v) const {
  Series out(order());
  Scalar pw(1L);
  for (int k = 0; k <= order(); ++k) {
    out.at(k) = c_[static_cast<size_t>(k)] * pw;
    pw = pw * v;
  }
  return out;
}

Series Series::mul_z(int k) const {
  Series s(order() + k);
  for (int i = 0; i <= order(); ++i) s.at(i + k) = c_[static_cast<size_t>(i)];
  return s;
}

Series Series::div_z(int k) const {
  for (int i = 0; i < k; ++i)
    if (!c_[static_cast<size_t>(i)].is_zero())
      throw DomainError("series: div_z with nonzero low-order coefficient");
  if (order() < k) throw DomainError("series: div_z exceeds order");
  Series s(order() - k);
  for (int i = 0; i <= s.order(); ++i) s.at(i) = c_[static_cast<size_t>(i + k)];
  return s;
}

Series Series::operator-() const {
  Series s(order());
  for (int k = 0; k <= order(); ++k) s.at(k) = -c_[static_cast<size_t>(k)];
  return s;
}

Series operator+(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series s(n);
  for (int k = 0; k <= n; ++k) s.at(k) = a[k] + b[k];
  return s;
}

Series operator-(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series s(n);
  for (int k = 0; k <= n; ++k) s.at(k) = a[k] - b[k];
  return s;
}

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series s(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      s.at(i + j) += a[i] * b[j];
    }
  }
  return s;
}

Series operator/(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  if (b[0].is_zero())
    throw DivisionByZeroError("series: division requires invertible constant term");
  const Scalar inv = Scalar(1L) / b[0];
  Series s(n);
  for (int k = 0; k <= n; ++k) {
    Scalar acc = a[k];
    for (int j = 1; j <= k; ++j) {
      if (b[j].is_zero() || s[k - j].is_zero()) continue;
      acc -= b[j] * s[k - j];
    }
    s.at(k) = acc * inv;
  }
  return s;
}

Series Series::pow(unsigned e) const {
  Series acc = Series::constant(Scalar(1L), order());
  Series base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}


Series compose(const Series& outer, const Series& inner) {
  if (!inner[0].is_zero())
    throw DomainError("series: composition requires inner constant term 0");
  const int n = std::min(outer.order(), inner.order());
  const Series in = inner.truncated(n);
  Series r = Series::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    r = r * in;
    r.at(0) += outer[k];
  }
  return r;
}

Series revert(const Series& f) {
  const int n = f.order();
  if (n < 1 || !f[0].is_zero())
    throw DomainError("series: reversion requires f(0) = 0");
  if (f[1].is_zero())
    throw DomainError("series: reversion requires nonzero linear coefficient");
  const Scalar inv = Scalar(1L) / f[1];
  Series g(n);
  g.at(1) = inv;
  for (int m = 2; m <= n; ++m) {
    const Series h = compose(f.truncated(m), g.truncated(m));
    g.at(m) = -(h[m] * inv);
  }
  // Exact verification of the defining identity.
  const Series check = compose(f, g);
  if (!(check == Series::z(n)))
    throw Error("series: reversion self-check failed");
  return g;
}

Series revert_lagrange(const Series& f) {
  const int n = f.order();
  if (n < 1 || !f[0].is_zero() || f[1].is_zero())
    throw DomainError("series: reversion requires f(0) = 0, f'(0) != 0");
  // h = z / f(z), an invertible series of order n-1.
  const Series fz = f.div_z(1);
  const Series h = Series::constant(Scalar(1L), n - 1) / fz;
  Series g(n);
  Series hp = Series::constant(Scalar(1L), n - 1);
  for (int k = 1; k <= n; ++k) {
    hp = hp * h;
    g.at(k) = hp[k - 1] / Scalar(static_cast<long>(k));
  }
  return g;
}

Series series_exp(const Series& f) {
  if (!f[0].is_zero())
    throw DomainError("series: exp requires zero constant term");
  const int n = f.order();
  Series acc = Series::constant(Scalar(1L), n);
  Series power = Series::constant(Scalar(1L), n);
  Rat mfact(1);
  for (int m = 1; m <= n; ++m) {
    power = power * f;
    mfact *= m;
    for (int k = 0; k <= n; ++k)
      if (!power[k].is_zero()) acc.at(k) += power[k] * Scalar(Rat(1) / mfact);
  }
  return acc;
}

Series binom_pow(const Series& f, const Rat& a) {
  if (!(f[0] == Scalar(1L)))
    throw DomainError("series: fractional powers require constant term 1");
  const int n = f.order();
  Series g = f;
  g.at(0) = Scalar(0L);
  Series acc = Series::constant(Scalar(1L), n);
  Series power = Series::constant(Scalar(1L), n);
  for (int m = 1; m <= n; ++m) {
    power = power * g;
    // binom(a, m) = (-1)^m (-a)_m / m!
    Rat coeff = pochhammer(-a, static_cast<unsigned>(m)) / factorial(static_cast<unsigned long>(m));
    if (m % 2) coeff = -coeff;
    if (sgn(coeff) == 0) continue;
    for (int k = 0; k <= n; ++k)
      if (!power[k].is_zero()) acc.at(k) += power[k] * Scalar(coeff);
  }
  return acc;
}

Series series_sqrt(const Series& f) { return binom_pow(f, Rat(1, 2)); }

Series alpha_series(int order) {
  if (order < 1) throw DomainError("series: alpha expansion needs order >= 1");
  Series one_minus_w(order);
  one_minus_w.at(0) = Scalar(1L);
  if (order >= 1) one_minus_w.at(1) = Scalar(-1L);
  const Series s = series_sqrt(one_minus_w);
  const Series one = Series::constant(Scalar(1L), order);
  return (one - s) / (one + s);
}

Series brown_transform(const Series& r) {
  const int n = r.order();
  Series p(n);
  for (int m = 0; m <= n; ++m) {
    Scalar acc;
    for (int k = 0; k <= m; ++k) {
      if (r[k].is_zero()) continue;
      acc += Scalar(binomial(2L * m, static_cast<long>(m - k))) * r[k];
    }
    p.at(m) = acc;
  }
  return p;
}

}  // namespace freeprob
