#pragma once

// Coefficient-ring traits. Every coefficient type T used with Polynomial<T>
// provides a Ring<T> specialization with:
//
//   Context                   data needed to build constants (empty for Q,
//                             the field handle for number-field elements)
//   zero(ctx), one(ctx), from_int(ctx, n)
//   context_of(x)
//   is_zero(x), is_unit(x), inverse(x)   inverse only for units
//   exact_div(a, b)           a / b, b must divide a exactly
//   kIsField
//   to_string(x)

#include <string>

#include "belyi/arith.hpp"

namespace belyi {

template <class T>
struct Ring;

/// Context tag for the rational field.
struct QQ {
  friend bool operator==(QQ, QQ) { return true; }
};

template <>
struct Ring<Rational> {
  using Context = QQ;
  static constexpr bool kIsField = true;

  static Rational zero(QQ) { return Rational(0); }
  static Rational one(QQ) { return Rational(1); }
  static Rational from_int(QQ, long n) { return Rational(n); }
  static QQ context_of(const Rational&) { return {}; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool is_unit(const Rational& x) { return sgn(x) != 0; }
  static Rational inverse(const Rational& x) {
    if (sgn(x) == 0) throw DomainError("division by zero");
    return Rational(1) / x;
  }
  static Rational exact_div(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) throw DomainError("division by zero");
    return a / b;
  }
  static std::string to_string(const Rational& x) { return belyi::to_string(x); }
};

}  // namespace belyi
