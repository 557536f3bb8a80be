#include "freeprob/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

#include "freeprob/error.hpp"

namespace freeprob {

// ---------------------------------------------------------------------------
// Construction and canonical form
// ---------------------------------------------------------------------------

Scalar Scalar::t() { return Scalar(Poly::var_t()); }

Scalar Scalar::q() { return Scalar(Poly::var_q()); }

Scalar Scalar::q_pow(long k) {
  if (k >= 0) return Scalar(Poly::monomial(Mono{0, static_cast<int32_t>(k)}, Rat(1)));
  Scalar s;
  s.num_ = Poly(Rat(1));
  s.den_ = Poly::monomial(Mono{0, static_cast<int32_t>(-k)}, Rat(1));
  return s;
}

Scalar Scalar::from_frac(Poly num, Poly den) {
  Scalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (den_.is_zero())
    throw DivisionByZeroError("scalar: zero denominator under " + poly_str(num_));
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  if (den_.is_constant()) {
    const Rat c = den_.constant_term();
    if (c != 1) num_ = num_.mul_rat(Rat(1) / c);
    den_ = Poly(Rat(1));
    return;
  }
  const Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  if (den_.is_constant()) {
    const Rat c = den_.constant_term();
    if (c != 1) num_ = num_.mul_rat(Rat(1) / c);
    den_ = Poly(Rat(1));
    return;
  }
  const Rat lead = den_.lead_coeff();
  if (lead != 1) {
    const Rat inv = Rat(1) / lead;
    num_ = num_.mul_rat(inv);
    den_ = den_.mul_rat(inv);
  }
}

bool Scalar::is_rational(Rat* out) const {
  if (!num_.is_constant() || !den_.is_one()) return false;
  if (out) *out = num_.constant_term();
  return true;
}

// ---------------------------------------------------------------------------
// Field arithmetic
// ---------------------------------------------------------------------------

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Scalar s;
  if (a.den_ == b.den_) {
    // Residual common factors divide the shared denominator.
    s.num_ = a.num_ + b.num_;
    if (s.num_.is_zero()) return Scalar();
    s.den_ = a.den_;
    const Poly h = Poly::gcd(s.num_, s.den_);
    if (!h.is_one()) {
      s.num_ = s.num_.div_exact(h);
      s.den_ = s.den_.div_exact(h);
    }
  } else {
    // num/den over the least common denominator; the residual common factor
    // divides g0 = gcd(d1, d2), so only small gcds are ever taken.
    const Poly g0 = Poly::gcd(a.den_, b.den_);
    if (g0.is_one()) {
      s.num_ = a.num_ * b.den_ + b.num_ * a.den_;
      s.den_ = a.den_ * b.den_;
    } else {
      const Poly d1r = a.den_.div_exact(g0);
      const Poly d2r = b.den_.div_exact(g0);
      s.num_ = a.num_ * d2r + b.num_ * d1r;
      s.den_ = a.den_ * d2r;
      if (!s.num_.is_zero()) {
        const Poly h = Poly::gcd(s.num_, g0);
        if (!h.is_one()) {
          s.num_ = s.num_.div_exact(h);
          s.den_ = s.den_.div_exact(h);
        }
      }
    }
  }
  if (s.num_.is_zero()) return Scalar();
  // Only a monic rescale can remain.
  if (s.den_.is_constant()) {
    const Rat c = s.den_.constant_term();
    if (c != 1) s.num_ = s.num_.mul_rat(Rat(1) / c);
    s.den_ = Poly(Rat(1));
  } else {
    const Rat lead = s.den_.lead_coeff();
    if (lead != 1) {
      const Rat inv = Rat(1) / lead;
      s.num_ = s.num_.mul_rat(inv);
      s.den_ = s.den_.mul_rat(inv);
    }
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  // Cross-reduce before multiplying; the factors of each canonical operand
  // are coprime, so only the cross pairs can share factors.
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_one() && !an.is_zero()) {
    const Poly g = Poly::gcd(an, bd);
    if (!g.is_one()) {
      an = an.div_exact(g);
      bd = bd.div_exact(g);
    }
  }
  if (!ad.is_one() && !bn.is_zero()) {
    const Poly g = Poly::gcd(bn, ad);
    if (!g.is_one()) {
      bn = bn.div_exact(g);
      ad = ad.div_exact(g);
    }
  }
  Scalar s;
  s.num_ = an * bn;
  s.den_ = ad * bd;
  if (s.num_.is_zero()) {
    s.den_ = Poly(Rat(1));
    return s;
  }
  // Residual normalization is only a scaling of the denominator.
  if (s.den_.is_constant()) {
    const Rat c = s.den_.constant_term();
    if (c != 1) s.num_ = s.num_.mul_rat(Rat(1) / c);
    s.den_ = Poly(Rat(1));
  } else {
    const Rat lead = s.den_.lead_coeff();
    if (lead != 1) {
      const Rat inv = Rat(1) / lead;
      s.num_ = s.num_.mul_rat(inv);
      s.den_ = s.den_.mul_rat(inv);
    }
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw DivisionByZeroError("scalar: division by zero (operand 0)");
  Scalar s;
  s.num_ = den_;
  s.den_ = num_;
  const Rat lead = s.den_.lead_coeff();
  if (lead != 1) {
    const Rat inv = Rat(1) / lead;
    s.num_ = s.num_.mul_rat(inv);
    s.den_ = s.den_.mul_rat(inv);
  }
  if (s.den_.is_constant()) {
    // Constant denominators fold into the numerator.
    s.num_ = s.num_.mul_rat(Rat(1) / s.den_.constant_term());
    s.den_ = Poly(Rat(1));
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero())
    throw DivisionByZeroError("scalar: division of " + a.str() + " by zero");
  return a * b.inverse();
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return Scalar(1L);
  const Scalar base = e < 0 ? inverse() : *this;
  unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar acc(1L);
  Scalar b = base;
  while (m) {
    if (m & 1) acc *= b;
    b *= b;
    m >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Derivation, substitution, evaluation
// ---------------------------------------------------------------------------

namespace {
// D on polynomials: d/dt with Q carrying weight -1/2 per power.
Poly poly_derive(const Poly& p) {
  return p.dt_partial() + p.dq_partial().mul_term(Mono{0, 1}, Rat(-1, 2));
}
}  // namespace

Scalar Scalar::d_dt() const {
  if (is_poly()) return Scalar(poly_derive(num_));
  Scalar s;
  s.num_ = poly_derive(num_) * den_ - num_ * poly_derive(den_);
  s.den_ = den_ * den_;
  s.normalize();
  return s;
}

Scalar Scalar::subst_q(const Rat& q0) const {
  const Poly d = den_.subst_q(q0);
  if (d.is_zero())
    throw PoleError("scalar: denominator vanishes under Q := " + rat_str(q0) +
                    " in " + str());
  return from_frac(num_.subst_q(q0), d);
}

Rat Scalar::eval_rat(const Rat& t0, const Rat& q0) const {
  const Rat d = den_.eval_rat(t0, q0);
  if (sgn(d) == 0)
    throw PoleError("scalar: pole at (t, Q) = (" + rat_str(t0) + ", " +
                    rat_str(q0) + ") in " + str());
  return num_.eval_rat(t0, q0) / d;
}

BigFloat Scalar::eval(const Rat& t0, mpfr_prec_t precision_bits) const {
  if (precision_bits < 53)
    throw DomainError("scalar: eval requires precision_bits >= 53");
  if (sgn(t0) < 0) throw DomainError("scalar: eval requires t0 >= 0");
  const mpfr_prec_t work = precision_bits + 32;
  if (sgn(t0) == 0) {
    // Q = 1 exactly: evaluate in exact rational arithmetic.
    const Rat v = eval_rat(Rat(0), Rat(1));
    return BigFloat::from_rat(v, precision_bits);
  }
  const BigFloat qv = exp_rat(-t0 / 2, work);
  const BigFloat tv = BigFloat::from_rat(t0, work);

  const int mt = std::max(num_.deg_t(), den_.deg_t());
  const int mq = std::max(num_.deg_q(), den_.deg_q());
  std::vector<BigFloat> tp, qp;
  tp.reserve(mt + 1);
  qp.reserve(mq + 1);
  tp.push_back(BigFloat::from_long(1, work));
  for (int i = 1; i <= mt; ++i) tp.push_back(tp.back() * tv);
  qp.push_back(BigFloat::from_long(1, work));
  for (int i = 1; i <= mq; ++i) qp.push_back(qp.back() * qv);

  auto eval_poly = [&](const Poly& p) {
    BigFloat acc(work);
    for (const auto& [m, c] : p.terms())
      acc = acc + BigFloat::from_rat(c, work) * tp[static_cast<size_t>(m.dt)] *
                      qp[static_cast<size_t>(m.dq)];
    return acc;
  };

  const BigFloat dv = eval_poly(den_);
  if (dv.is_zero())
    throw PoleError("scalar: pole at t = " + rat_str(t0) + " in " + str());
  return (eval_poly(num_) / dv).to_prec(precision_bits);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string monomial_str(const Rat& mag, int dt, int dq) {
  std::vector<std::string> parts;
  if (mag != 1 || (dt == 0 && dq == 0)) parts.push_back(rat_str(mag));
  if (dt > 0) parts.push_back(dt == 1 ? "t" : "t^" + std::to_string(dt));
  if (dq > 0) parts.push_back(dq == 1 ? "Q" : "Q^" + std::to_string(dq));
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

// Renders a list of (dt, coeff) pairs, ascending in dt, with internal signs.
std::string tpoly_str(const std::vector<std::pair<int, Rat>>& terms) {
  std::string s;
  bool first = true;
  for (const auto& [dt, c] : terms) {
    const bool neg = sgn(c) < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    s += monomial_str(mag, dt, 0);
  }
  return s;
}

}  // namespace

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  // Group by Q-degree, ascending; within groups ascending t-degree.
  std::map<int, std::vector<std::pair<int, Rat>>> groups;
  for (const auto& [m, c] : p.terms()) groups[m.dq].emplace_back(m.dt, c);
  for (auto& [dq, terms] : groups)
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

  std::string s;
  bool first = true;
  for (const auto& [dq, terms] : groups) {
    std::string piece;
    int sign = 1;
    if (terms.size() == 1) {
      const auto& [dt, c] = terms[0];
      sign = sgn(c) < 0 ? -1 : 1;
      piece = monomial_str(sign < 0 ? Rat(-c) : c, dt, dq);
    } else if (dq == 0) {
      piece = tpoly_str(terms);
      sign = 1;
    } else {
      bool all_neg = true;
      for (const auto& [dt, c] : terms) all_neg = all_neg && sgn(c) < 0;
      auto inner = terms;
      if (all_neg) {
        sign = -1;
        for (auto& [dt, c] : inner) c = -c;
      }
      piece = "(" + tpoly_str(inner) + ")" +
              (dq == 1 ? "*Q" : "*Q^" + std::to_string(dq));
    }
    if (first) {
      if (sign < 0) s += "-";
      s += piece;
      first = false;
    } else {
      s += sign < 0 ? " - " : " + ";
      s += piece;
    }
  }
  return s;
}

std::string Scalar::str() const {
  if (den_.is_one()) return poly_str(num_);
  const std::string ns =
      num_.is_monomial() ? poly_str(num_) : "(" + poly_str(num_) + ")";
  return ns + "/(" + poly_str(den_) + ")";
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("scalar: trailing input at offset " + std::to_string(pos_));
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*'))
        v *= factor();
      else if (eat('/'))
        v /= factor();
      else
        return v;
    }
  }

  Scalar factor() {
    int neg = 0;
    while (eat('-')) ++neg;
    Scalar v = atom();
    if (eat('^')) v = v.pow(integer_literal());
    return (neg % 2) ? -v : v;
  }

  Scalar atom() {
    const char c = peek();
    if (c == '(') {
      eat('(');
      Scalar v = expr();
      if (!eat(')')) throw ParseError("scalar: expected ')' at offset " + std::to_string(pos_));
      return v;
    }
    if (c == 't') {
      ++pos_;
      return Scalar::t();
    }
    if (c == 'Q') {
      ++pos_;
      return Scalar::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rat(digits()));
    throw ParseError("scalar: unexpected character '" + std::string(1, c) +
                     "' at offset " + std::to_string(pos_));
  }

  long integer_literal() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    const Int v(digits());
    if (!v.fits_slong_p()) throw ParseError("scalar: exponent out of range");
    return neg ? -v.get_si() : v.get_si();
  }

  Int digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start)
      throw ParseError("scalar: expected digits at offset " + std::to_string(pos_));
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace freeprob
