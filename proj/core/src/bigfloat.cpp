#include "freeprob/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace freeprob {

BigFloat::BigFloat(mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(x_, o.prec());
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(x_, o.prec());
  mpfr_swap(x_, o.x_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(x_, o.prec());
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(x_, o.x_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(x_); }

BigFloat BigFloat::from_rat(const Rat& r, mpfr_prec_t prec) {
  BigFloat f(prec);
  mpfr_set_q(f.x_, r.get_mpq_t(), MPFR_RNDN);
  return f;
}

BigFloat BigFloat::from_long(long v, mpfr_prec_t prec) {
  BigFloat f(prec);
  mpfr_set_si(f.x_, v, MPFR_RNDN);
  return f;
}

namespace {
mpfr_prec_t common_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(common_prec(a, b));
  mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(common_prec(a, b));
  mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(common_prec(a, b));
  mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(common_prec(a, b));
  mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(prec());
  mpfr_exp(r.x_, x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.x_, x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_si(long e) const {
  BigFloat r(prec());
  mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
  return r;
}

std::string BigFloat::dec(int digits) const {
  if (digits < 1) digits = 1;
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, x_);
  return std::string(buf.data());
}

BigFloat BigFloat::ulp() const {
  BigFloat r(prec());
  if (is_zero()) return r;
  const mpfr_exp_t e = mpfr_get_exp(x_);
  mpfr_set_ui_2exp(r.x_, 1, e - prec(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::to_prec(mpfr_prec_t prec) const {
  BigFloat r(prec);
  mpfr_set(r.x_, x_, MPFR_RNDN);
  return r;
}

BigFloat exp_rat(const Rat& r, mpfr_prec_t prec) {
  return BigFloat::from_rat(r, prec).exp();
}

}  // namespace freeprob
