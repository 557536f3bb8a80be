#include "freeprob/poly.hpp"

#include <algorithm>
#include <map>

#include "freeprob/error.hpp"

namespace freeprob {

namespace {

struct MonoGreater {
  bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) > 0; }
};

// ---------------------------------------------------------------------------
// Univariate and bivariate gcd machinery over primitive integer polynomials
// (contents stripped at every step so coefficient growth stays polynomial).
// A UZ is a dense integer-coefficient polynomial in Q, lowest degree first,
// trimmed; a TZ is a polynomial in t with UZ coefficients.
// ---------------------------------------------------------------------------

using UZ = std::vector<Int>;

void uz_trim(UZ& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

bool uz_is_zero(const UZ& p) { return p.empty(); }

int uz_deg(const UZ& p) { return static_cast<int>(p.size()) - 1; }

Int uz_content(const UZ& p) {
  Int c(0);
  for (const Int& x : p) {
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    if (c == 1) break;
  }
  return c;
}

// Divides by the content and makes the leading coefficient positive.
void uz_make_primitive(UZ& p) {
  if (uz_is_zero(p)) return;
  Int c = uz_content(p);
  if (sgn(p.back()) < 0) c = -c;
  if (c != 1)
    for (Int& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

UZ uz_mul(const UZ& a, const UZ& b) {
  if (uz_is_zero(a) || uz_is_zero(b)) return {};
  UZ r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  uz_trim(r);
  return r;
}

UZ uz_sub(const UZ& a, const UZ& b) {
  UZ r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  uz_trim(r);
  return r;
}

UZ uz_scale(const UZ& a, const Int& c) {
  if (sgn(c) == 0) return {};
  UZ r = a;
  for (Int& x : r) x *= c;
  return r;
}

// Primitive pseudo-remainder: content-stripped after each elimination step.
UZ uz_prem(UZ a, const UZ& b) {
  const int db = uz_deg(b);
  while (!uz_is_zero(a) && uz_deg(a) >= db) {
    const Int la = a.back();
    const Int lb = b.back();
    const int shift = uz_deg(a) - db;
    UZ scaled = uz_scale(a, lb);
    for (int i = 0; i <= db; ++i)
      scaled[static_cast<size_t>(i + shift)] -= la * b[static_cast<size_t>(i)];
    uz_trim(scaled);
    uz_make_primitive(scaled);
    a = std::move(scaled);
  }
  return a;
}

UZ uz_gcd(UZ a, UZ b) {
  uz_make_primitive(a);
  uz_make_primitive(b);
  if (uz_deg(a) < uz_deg(b)) std::swap(a, b);
  while (!uz_is_zero(b)) {
    UZ r = uz_prem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Exact division in Z[Q] (valid by Gauss's lemma when the divisor is
// primitive and divides); throws on any inexact step.
UZ uz_div_exact(UZ a, const UZ& b) {
  if (uz_is_zero(b)) throw Error("poly: exact division by zero");
  if (uz_is_zero(a)) return {};
  const int db = uz_deg(b);
  if (uz_deg(a) < db) throw Error("poly: inexact univariate division");
  UZ q(a.size() - b.size() + 1, Int(0));
  while (!uz_is_zero(a) && uz_deg(a) >= db) {
    Int f;
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t()))
      throw Error("poly: inexact univariate division");
    mpz_divexact(f.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    const int shift = uz_deg(a) - db;
    q[static_cast<size_t>(shift)] = f;
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(i + shift)] -= f * b[static_cast<size_t>(i)];
    uz_trim(a);
  }
  if (!uz_is_zero(a)) throw Error("poly: inexact univariate division");
  return q;
}

using TZ = std::vector<UZ>;

void tz_trim(TZ& p) {
  while (!p.empty() && uz_is_zero(p.back())) p.pop_back();
}

bool tz_is_zero(const TZ& p) { return p.empty(); }

int tz_deg(const TZ& p) { return static_cast<int>(p.size()) - 1; }

UZ tz_content(const TZ& p) {
  UZ c;
  for (const auto& u : p) {
    if (uz_is_zero(u)) continue;
    c = uz_is_zero(c) ? u : uz_gcd(c, u);
    if (uz_deg(c) == 0 && c[0] == 1) break;
  }
  uz_make_primitive(c);
  return c;
}

TZ tz_div_content(const TZ& p, const UZ& c) {
  TZ r(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    if (!uz_is_zero(p[i])) r[i] = uz_div_exact(p[i], c);
  tz_trim(r);
  return r;
}

void tz_make_primitive(TZ& p) {
  if (tz_is_zero(p)) return;
  const UZ c = tz_content(p);
  if (uz_deg(c) == 0 && c[0] == 1) return;
  p = tz_div_content(p, c);
}

// Plain pseudo-remainder in t (scaled by lc(b) at every elimination step).
TZ tz_prem(TZ a, const TZ& b) {
  const int db = tz_deg(b);
  while (!tz_is_zero(a) && tz_deg(a) >= db) {
    const UZ la = a.back();
    const UZ& lb = b.back();
    const int shift = tz_deg(a) - db;
    TZ scaled(a.size());
    for (size_t i = 0; i < a.size(); ++i) scaled[i] = uz_mul(a[i], lb);
    for (int i = 0; i <= db; ++i)
      scaled[static_cast<size_t>(i + shift)] =
          uz_sub(scaled[static_cast<size_t>(i + shift)],
                 uz_mul(la, b[static_cast<size_t>(i)]));
    tz_trim(scaled);
    a = std::move(scaled);
  }
  return a;
}

TZ tz_div_uz(const TZ& p, const UZ& d) {
  TZ r(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    if (!uz_is_zero(p[i])) r[i] = uz_div_exact(p[i], d);
  tz_trim(r);
  return r;
}

UZ uz_pow(const UZ& b, int e) {
  UZ acc = {Int(1)};
  for (int i = 0; i < e; ++i) acc = uz_mul(acc, b);
  return acc;
}

bool tz_primitive_gcd_is_trivial(const TZ& a, const TZ& b);

// Subresultant remainder sequence (Collins): intermediate remainders are
// divided by the predicted factors g * h^delta, so no content gcds are
// needed inside the loop and coefficient growth stays polynomial.
TZ tz_gcd(TZ a, TZ b) {
  const UZ ca = tz_content(a), cb = tz_content(b);
  a = tz_div_content(a, ca);
  b = tz_div_content(b, cb);
  const UZ cg = uz_gcd(ca, cb);
  if (tz_deg(a) < tz_deg(b)) std::swap(a, b);
  if (tz_deg(b) == 0 || tz_primitive_gcd_is_trivial(a, b)) {
    // Primitive parts are coprime; only the contents contribute.
    TZ g = {cg};
    tz_trim(g);
    return g;
  }
  UZ gfac = {Int(1)}, hfac = {Int(1)};
  for (;;) {
    const int delta = tz_deg(a) - tz_deg(b);
    TZ r = tz_prem(a, b);
    if (tz_is_zero(r)) break;
    r = tz_div_uz(r, uz_mul(gfac, uz_pow(hfac, delta)));
    a = std::move(b);
    b = std::move(r);
    if (tz_deg(b) == 0) break;  // gcd of primitive parts is a unit
    gfac = a.back();
    if (delta >= 1) {
      UZ gd = uz_pow(gfac, delta);
      hfac = delta == 1 ? gd : uz_div_exact(gd, uz_pow(hfac, delta - 1));
    }
  }
  if (tz_deg(b) == 0 && !tz_is_zero(b)) {
    TZ g = {cg};
    tz_trim(g);
    return g;
  }
  tz_make_primitive(b);
  TZ g(b.size());
  for (size_t i = 0; i < b.size(); ++i) g[i] = uz_mul(b[i], cg);
  tz_trim(g);
  return g;
}

// Conversion to/from the sparse rational representation.  The rational
// content is irrelevant for gcd purposes (the result is normalized monic),
// so denominators are simply cleared.
TZ to_tz(const Poly& p) {
  Int lcm(1);
  for (const auto& [m, c] : p.terms())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  TZ r(static_cast<size_t>(p.deg_t()) + 1);
  for (const auto& [m, c] : p.terms()) {
    auto& u = r[static_cast<size_t>(m.dt)];
    if (uz_deg(u) < m.dq) u.resize(static_cast<size_t>(m.dq) + 1, Int(0));
    u[static_cast<size_t>(m.dq)] = c.get_num() * (lcm / c.get_den());
  }
  tz_trim(r);
  return r;
}

Poly from_tz(const TZ& p) {
  std::vector<Poly::Term> terms;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p[i].size(); ++j)
      if (sgn(p[i][j]) != 0)
        terms.emplace_back(Mono{static_cast<int32_t>(i), static_cast<int32_t>(j)},
                           Rat(p[i][j]));
  return Poly::from_terms(std::move(terms));
}

Int uz_eval_int(const UZ& p, long q0) {
  Int acc(0);
  for (size_t j = p.size(); j-- > 0;) acc = acc * q0 + p[j];
  return acc;
}

// Projects a primitive TZ to an integer polynomial in t via Q := q0.
UZ tz_project_q(const TZ& p, long q0) {
  UZ r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = uz_eval_int(p[i], q0);
  uz_trim(r);
  return r;
}

// Sound triviality screen for primitive operands: pick q0 that keeps the
// leading t-coefficient of `a` alive; any common factor g then satisfies
// deg_t g(t, q0) = deg_t g, and g(t, q0) divides the univariate gcd at q0.
// A constant univariate gcd therefore forces deg_t g = 0, and a primitive
// Q-content makes g a unit.
bool tz_primitive_gcd_is_trivial(const TZ& a, const TZ& b) {
  static constexpr long candidates[] = {2, 3, 5, 7, 11, 13};
  for (long q0 : candidates) {
    if (sgn(uz_eval_int(a.back(), q0)) == 0) continue;
    const UZ ap = tz_project_q(a, q0);
    const UZ bp = tz_project_q(b, q0);
    if (uz_is_zero(bp)) return false;
    const UZ g = uz_gcd(ap, bp);
    return uz_deg(g) == 0;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly::Poly(const Rat& c) {
  if (sgn(c) != 0) {
    Rat r = c;
    r.canonicalize();
    terms_.emplace_back(Mono{0, 0}, std::move(r));
  }
}

Poly::Poly(long c) : Poly(Rat(c)) {}

Poly Poly::var_t() { return monomial(Mono{1, 0}, Rat(1)); }

Poly Poly::var_q() { return monomial(Mono{0, 1}, Rat(1)); }

Poly Poly::monomial(Mono m, const Rat& c) {
  Poly p;
  if (sgn(c) != 0) {
    Rat r = c;
    r.canonicalize();
    p.terms_.emplace_back(m, std::move(r));
  }
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  for (auto& [m, c] : terms) c.canonicalize();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return mono_cmp(a.first, b.first) > 0; });
  Poly p;
  for (auto& [m, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == m) {
      p.terms_.back().second += c;
      if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    } else if (sgn(c) != 0) {
      p.terms_.emplace_back(m, std::move(c));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Mono{0, 0});
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Mono{0, 0} && terms_[0].second == 1;
}

Rat Poly::constant_term() const {
  if (terms_.empty()) return Rat(0);
  const auto& last = terms_.back();
  return last.first == Mono{0, 0} ? last.second : Rat(0);
}

const Mono& Poly::lead_mono() const {
  if (terms_.empty()) throw Error("poly: leading monomial of zero");
  return terms_.front().first;
}

const Rat& Poly::lead_coeff() const {
  if (terms_.empty()) throw Error("poly: leading coefficient of zero");
  return terms_.front().second;
}

int Poly::deg_t() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.dt));
  return d;
}

int Poly::deg_q() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.dq));
  return d;
}

int Poly::min_deg_t() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first.dt;
  for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(m.dt));
  return d;
}

int Poly::min_deg_q() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first.dq;
  for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(m.dq));
  return d;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = mono_cmp(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      merged.push_back(terms_[i++]);
    } else if (c < 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rat s = terms_[i].second + o.terms_[j].second;
      if (sgn(s) != 0) merged.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) merged.push_back(terms_[i++]);
  while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (b.is_monomial()) return a.mul_term(b.terms()[0].first, b.terms()[0].second);
  if (a.is_monomial()) return b.mul_term(a.terms()[0].first, a.terms()[0].second);
  std::map<Mono, Rat, MonoGreater> acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      acc[Mono{ma.dt + mb.dt, ma.dq + mb.dq}] += ca * cb;
  Poly p;
  std::vector<Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.emplace_back(m, std::move(c));
  // The map is already grlex-descending.
  p = Poly();
  p = Poly::from_terms(std::move(terms));
  return p;
}

Poly Poly::mul_term(const Mono& m, const Rat& c) const {
  if (sgn(c) == 0) return Poly();
  Poly p = *this;
  for (auto& [mm, cc] : p.terms_) {
    mm.dt += m.dt;
    mm.dq += m.dq;
    cc *= c;
  }
  return p;
}

Poly Poly::mul_rat(const Rat& c) const { return mul_term(Mono{0, 0}, c); }

Poly Poly::pow(unsigned e) const {
  Poly acc(Rat(1));
  Poly base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::dt_partial() const {
  std::vector<Term> terms;
  for (const auto& [m, c] : terms_)
    if (m.dt > 0) terms.emplace_back(Mono{m.dt - 1, m.dq}, c * m.dt);
  return from_terms(std::move(terms));
}

Poly Poly::dq_partial() const {
  std::vector<Term> terms;
  for (const auto& [m, c] : terms_)
    if (m.dq > 0) terms.emplace_back(Mono{m.dt, m.dq - 1}, c * m.dq);
  return from_terms(std::move(terms));
}

Rat Poly::eval_rat(const Rat& t0, const Rat& q0) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_)
    acc += c * pow_rat(t0, m.dt) * pow_rat(q0, m.dq);
  return acc;
}

Poly Poly::subst_q(const Rat& q0) const {
  std::vector<Term> terms;
  for (const auto& [m, c] : terms_) {
    Rat v = c * pow_rat(q0, m.dq);
    if (sgn(v) != 0) terms.emplace_back(Mono{m.dt, 0}, std::move(v));
  }
  return from_terms(std::move(terms));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  auto monic = [](Poly p) {
    if (!p.is_zero() && p.lead_coeff() != 1) p = p.mul_rat(Rat(1) / p.lead_coeff());
    return p;
  };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);

  // Common monomial factor.
  const Mono shift{std::min(a.min_deg_t(), b.min_deg_t()),
                   std::min(a.min_deg_q(), b.min_deg_q())};
  if (a.is_monomial() || b.is_monomial())
    return monomial(shift, Rat(1));
  // Strip the common monomial part from each operand.
  Poly a2 = a.mul_term(Mono{-shift.dt, -shift.dq}, Rat(1));
  Poly b2 = b.mul_term(Mono{-shift.dt, -shift.dq}, Rat(1));

  if (a2.is_constant() || b2.is_constant()) return monomial(shift, Rat(1));
  if (a2 == b2) return monic(a2).mul_term(shift, Rat(1));

  const TZ g = tz_gcd(to_tz(a2), to_tz(b2));
  Poly gp = from_tz(g);
  return monic(gp.mul_term(shift, Rat(1)));
}

Poly Poly::div_exact(const Poly& d) const {
  if (d.is_zero()) throw Error("poly: exact division by zero");
  if (d.is_one()) return *this;
  if (is_zero()) return Poly();
  if (d.is_monomial()) {
    const auto& [dm, dc] = d.terms()[0];
    Poly q;
    q.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      if (m.dt < dm.dt || m.dq < dm.dq) throw Error("poly: inexact division");
      q.terms_.emplace_back(Mono{m.dt - dm.dt, m.dq - dm.dq}, c / dc);
    }
    return q;
  }
  Poly rem = *this;
  std::vector<Term> qterms;
  const Mono& dl = d.lead_mono();
  const Rat& dc = d.lead_coeff();
  while (!rem.is_zero()) {
    const Mono& rl = rem.lead_mono();
    if (rl.dt < dl.dt || rl.dq < dl.dq) throw Error("poly: inexact division");
    const Mono qm{rl.dt - dl.dt, rl.dq - dl.dq};
    const Rat qc = rem.lead_coeff() / dc;
    qterms.emplace_back(qm, qc);
    rem -= d.mul_term(qm, qc);
  }
  return from_terms(std::move(qterms));
}

}  // namespace freeprob
