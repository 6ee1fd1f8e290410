#include "belyi/bigfloat.hpp"

#include <algorithm>
#include <utility>

namespace belyi {

namespace {
mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), rnd);
}

BigFloat::BigFloat(const Rational& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  // mpfr_t cannot be moved portably; swap with a freshly initialised value.
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  char* out = nullptr;
  mpfr_asprintf(&out, fmt.c_str(), v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.get(), v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), rnd);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y, mpfr_rnd_t rnd) {
  BigFloat r(wider(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), rnd);
  return r;
}

BigFloat root(const BigFloat& x, unsigned long k, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), k, rnd);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat pow2(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

BigFloat pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat mul_round(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(wider(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), rnd);
  return r;
}

BigFloat add_round(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(wider(a, b));
  mpfr_add(r.get(), a.get(), b.get(), rnd);
  return r;
}

Complex operator/(const Complex& a, const Complex& b) {
  BigFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

}  // namespace belyi
