#pragma once

// Dense univariate polynomials over an exact coefficient ring.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "belyi/ring.hpp"

namespace belyi {

template <class T>
class Polynomial {
 public:
  using Traits = Ring<T>;
  using Context = typename Traits::Context;
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(Context ctx) : ctx_(std::move(ctx)) {}
  /// Coefficients constant term first; trailing zeros are dropped.
  Polynomial(Context ctx, std::vector<T> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(const T& c) {
    return Polynomial(Traits::context_of(c), std::vector<T>{c});
  }
  static Polynomial monomial(const T& c, std::size_t k) {
    auto ctx = Traits::context_of(c);
    std::vector<T> v(k + 1, Traits::zero(ctx));
    v[k] = c;
    return Polynomial(ctx, std::move(v));
  }
  static Polynomial variable(const Context& ctx) {
    return monomial(Traits::one(ctx), 1);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<T>& coeffs() const { return c_; }
  const Context& context() const { return ctx_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Traits::zero(ctx_); }
  const T& lc() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  T constant_term() const { return coeff(0); }

  Polynomial& operator+=(const Polynomial& o) {
    adopt_context(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt_context(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const T& s) {
    if (Traits::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.c_.empty() ? b.ctx_ : a.ctx_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Traits::zero(r.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Horner evaluation at a scalar.
  T operator()(const T& x) const {
    T acc = Traits::zero(ctx_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(ctx_);
    std::vector<T> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * Traits::from_int(ctx_, static_cast<long>(i)));
    return Polynomial(ctx_, std::move(d));
  }

  /// Multiplication by X^k.
  Polynomial shifted(std::size_t k) const {
    if (c_.empty()) return *this;
    std::vector<T> v(k, Traits::zero(ctx_));
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(ctx_, std::move(v));
  }

  Polynomial pow(unsigned long e) const {
    Polynomial result = constant_one();
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1UL) result = result * base;
      e >>= 1UL;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Division with remainder; the divisor's leading coefficient must be a
  /// unit of the coefficient ring.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (!Traits::is_unit(d.lc())) throw DomainError("divisor leading coefficient is not a unit");
    Polynomial rem = *this;
    rem.adopt_context(d);
    if (rem.degree() < d.degree()) return {Polynomial(rem.ctx_), rem};
    const T inv = Traits::inverse(d.lc());
    const std::size_t dd = d.c_.size() - 1;
    std::vector<T> q(rem.c_.size() - dd, Traits::zero(rem.ctx_));
    for (std::size_t k = rem.c_.size(); k-- > dd;) {
      if (Traits::is_zero(rem.c_[k])) continue;
      T t = rem.c_[k] * inv;
      for (std::size_t j = 0; j <= dd; ++j) rem.c_[k - dd + j] -= t * d.c_[j];
      q[k - dd] = std::move(t);
    }
    rem.trim();
    return {Polynomial(rem.ctx_, std::move(q)), rem};
  }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

  /// Exact quotient; throws when b does not divide a.
  Polynomial exact_div(const Polynomial& b) const {
    auto [q, r] = divmod(b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
  }

  bool divides(const Polynomial& a) const { return (a % *this).is_zero(); }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    return *this * Traits::inverse(lc());
  }

  bool is_monic() const { return !c_.empty() && c_.back() == Traits::one(ctx_); }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    using UCtx = typename Ring<U>::Context;
    std::vector<U> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    UCtx uctx = v.empty() ? UCtx{} : Ring<U>::context_of(v.front());
    return Polynomial<U>(uctx, std::move(v));
  }

  Polynomial constant_one() const { return Polynomial(ctx_, {Traits::one(ctx_)}); }

 private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }
  void adopt_context(const Polynomial& o) {
    if (c_.empty()) ctx_ = o.ctx_;
  }

  Context ctx_{};
  std::vector<T> c_;
};

/// f(g(X)) by Horner's scheme.
template <class T>
Polynomial<T> compose(const Polynomial<T>& f, const Polynomial<T>& g) {
  Polynomial<T> acc(f.is_zero() ? g.context() : f.context());
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * g + Polynomial<T>::constant(*it);
  return acc;
}

/// Monic gcd over a field (zero if both inputs are zero).
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  static_assert(Ring<T>::kIsField, "gcd requires field coefficients");
  while (!b.is_zero()) {
    Polynomial<T> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Product of the distinct irreducible factors (monic).
template <class T>
Polynomial<T> squarefree_part(const Polynomial<T>& f) {
  if (f.degree() <= 0) return f.is_zero() ? f : f.constant_one();
  return f.exact_div(gcd(f, f.derivative())).monic();
}

/// Yun's algorithm: returns factors[k] = product of the monic irreducible
/// factors of multiplicity exactly k+1.
template <class T>
std::vector<Polynomial<T>> squarefree_decomposition(const Polynomial<T>& f) {
  std::vector<Polynomial<T>> out;
  if (f.degree() <= 0) return out;
  Polynomial<T> a = f.monic();
  Polynomial<T> d = a.derivative();
  Polynomial<T> g = gcd(a, d);
  Polynomial<T> b = a.exact_div(g);
  Polynomial<T> c = d.exact_div(g);
  Polynomial<T> e = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial<T> h = gcd(b, e);
    out.push_back(h);
    b = b.exact_div(h);
    c = e.exact_div(h);
    e = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

template <class T>
struct Ring<Polynomial<T>> {
  using Base = Ring<T>;
  using Context = typename Base::Context;
  static constexpr bool kIsField = false;

  static Polynomial<T> zero(const Context& ctx) { return Polynomial<T>(ctx); }
  static Polynomial<T> one(const Context& ctx) { return Polynomial<T>(ctx, {Base::one(ctx)}); }
  static Polynomial<T> from_int(const Context& ctx, long n) {
    return Polynomial<T>(ctx, {Base::from_int(ctx, n)});
  }
  static Context context_of(const Polynomial<T>& p) { return p.context(); }
  static bool is_zero(const Polynomial<T>& p) { return p.is_zero(); }
  static bool is_unit(const Polynomial<T>& p) { return p.degree() == 0 && Base::is_unit(p.lc()); }
  static Polynomial<T> inverse(const Polynomial<T>& p) {
    if (!is_unit(p)) throw DomainError("polynomial is not a unit");
    return Polynomial<T>::constant(Base::inverse(p.lc()));
  }
  static Polynomial<T> exact_div(const Polynomial<T>& a, const Polynomial<T>& b) {
    return a.exact_div(b);
  }
  static std::string to_string(const Polynomial<T>& p);
};

namespace detail {
inline bool needs_parens(const std::string& s) {
  return s.find_first_of("+-/", 0) != std::string::npos;
}
}  // namespace detail

/// Renders e.g. "x^4+2*x^2", "(1/2)*x^3-x".
template <class T>
std::string to_string(const Polynomial<T>& p, const std::string& var = "x") {
  using Tr = Ring<T>;
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (Tr::is_zero(c[k])) continue;
    std::string s = Tr::to_string(c[k]);
    bool negative = s.size() > 1 && s[0] == '-' && s.find_first_of("+-", 1) == std::string::npos;
    if (negative) s.erase(0, 1);
    if (!out.empty() || negative) out += negative ? "-" : "+";
    std::string mono;
    if (k >= 1) mono = var;
    if (k >= 2) mono += "^" + std::to_string(k);
    if (mono.empty()) {
      out += (!out.empty() && detail::needs_parens(s)) ? "(" + s + ")" : s;
    } else if (s == "1") {
      out += mono;
    } else {
      out += (detail::needs_parens(s) ? "(" + s + ")" : s) + "*" + mono;
    }
  }
  return out;
}

template <class T>
std::string Ring<Polynomial<T>>::to_string(const Polynomial<T>& p) {
  return belyi::to_string(p, "x");
}

using QPoly = Polynomial<Rational>;

}  // namespace belyi
