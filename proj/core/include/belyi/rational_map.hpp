#pragma once

// Rational maps num/den with coprime parts and monic denominator, and points
// of the projective line over a coefficient field.

#include <optional>
#include <string>

#include "belyi/polynomial.hpp"

namespace belyi {

/// A point of P^1: a finite value or infinity.
template <class T>
struct ProjPoint {
  std::optional<T> value;  // nullopt is infinity

  static ProjPoint infinity() { return {std::nullopt}; }
  static ProjPoint finite(T v) { return {std::move(v)}; }
  bool is_infinity() const { return !value.has_value(); }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.value == *b.value;
  }
};

template <class T>
class RationalMap {
 public:
  using Poly = Polynomial<T>;

  /// Cancels the gcd and makes the denominator monic.
  static RationalMap normalize(Poly num, Poly den) {
    if (den.is_zero()) throw DomainError("rational map with zero denominator");
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
    T inv = Ring<T>::inverse(den.lc());
    return RationalMap(num * inv, den * inv);
  }
  /// Trusts the caller that num and den are coprime; only rescales den.
  static RationalMap coprime(Poly num, Poly den) {
    if (den.is_zero()) throw DomainError("rational map with zero denominator");
    T inv = Ring<T>::inverse(den.lc());
    return RationalMap(num * inv, den * inv);
  }
  static RationalMap polynomial(Poly p) {
    auto one = p.constant_one();
    return RationalMap(std::move(p), std::move(one));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int degree() const { return std::max(num_.is_zero() ? 0 : num_.degree(), den_.degree()); }
  bool is_polynomial() const { return den_.degree() == 0; }
  const typename Poly::Context& context() const { return den_.context(); }

  ProjPoint<T> operator()(const ProjPoint<T>& p) const {
    if (p.is_infinity()) {
      const int dn = num_.is_zero() ? -1 : num_.degree();
      if (dn > den_.degree()) return ProjPoint<T>::infinity();
      if (dn < den_.degree()) return ProjPoint<T>::finite(Ring<T>::zero(context()));
      return ProjPoint<T>::finite(num_.lc() * Ring<T>::inverse(den_.lc()));
    }
    T d = den_(*p.value);
    if (Ring<T>::is_zero(d)) return ProjPoint<T>::infinity();
    return ProjPoint<T>::finite(num_(*p.value) * Ring<T>::inverse(d));
  }

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

template <class T>
RationalMap<T> rmap_normalize(Polynomial<T> num, Polynomial<T> den) {
  return RationalMap<T>::normalize(std::move(num), std::move(den));
}

/// (num/den) o g for a polynomial g; coprimality is preserved.
template <class T>
RationalMap<T> compose(const RationalMap<T>& f, const Polynomial<T>& g) {
  return RationalMap<T>::normalize(compose(f.num(), g), compose(f.den(), g));
}

template <class T>
std::string to_string(const RationalMap<T>& f, const std::string& var = "x") {
  std::string n = to_string(f.num(), var);
  if (f.is_polynomial() && f.den().lc() == Ring<T>::one(f.context())) return n;
  return "(" + n + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace belyi
