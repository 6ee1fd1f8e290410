#pragma once

// Thin RAII wrapper over mpfr_t. Every value carries its own precision; the
// result of a binary operation uses the larger of the two. No global state.

#include <string>

#include <mpfr.h>

#include "belyi/arith.hpp"

namespace belyi {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(long v, mpfr_prec_t prec);
  BigFloat(const Integer& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const Rational& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Decimal rendering with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
  BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
  BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat hypot(const BigFloat& x, const BigFloat& y, mpfr_rnd_t rnd = MPFR_RNDN);
/// x^(1/k) for x >= 0.
BigFloat root(const BigFloat& x, unsigned long k, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat max(const BigFloat& a, const BigFloat& b);
/// Exact power of two 2^e at the given precision.
BigFloat pow2(long e, mpfr_prec_t prec);
BigFloat pi(mpfr_prec_t prec);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);

/// Directed-rounding product and sum, for interval endpoints.
BigFloat mul_round(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
BigFloat add_round(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);

struct Complex {
  BigFloat re;
  BigFloat im;

  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b);
  BigFloat abs() const { return hypot(re, im); }
};

}  // namespace belyi
