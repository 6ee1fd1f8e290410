#pragma once

// Critical values of rational maps, as the roots of a polynomial in T plus a
// flag for infinity.

#include "belyi/rational_map.hpp"
#include "belyi/resultant.hpp"

namespace belyi {

template <class T>
struct CriticalValues {
  Polynomial<T> finite;  // monic; its roots are the finite critical values
  bool infinity = false;
};

namespace detail {
template <class T>
Polynomial<T> reversed(const Polynomial<T>& p, int k) {
  std::vector<T> c(static_cast<std::size_t>(k) + 1, Ring<T>::zero(p.context()));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(k - i)] = p.coeff(static_cast<std::size_t>(i));
  return Polynomial<T>(p.context(), std::move(c));
}
}  // namespace detail

/// Generic route: Res_Y(num(Y) - T den(Y), W(Y)) with W = num' den - num den',
/// plus the contribution of the point at infinity.
template <class T>
CriticalValues<T> critical_value_poly(const RationalMap<T>& f) {
  using P = Polynomial<T>;
  using Tr = Ring<T>;
  const auto ctx = f.context();
  if (f.degree() < 1) throw DomainError("critical values of a constant map");
  const P& num = f.num();
  const P& den = f.den();
  P w = num.derivative() * den - num * den.derivative();
  CriticalValues<T> out{P(ctx, {Tr::one(ctx)}), false};
  if (f.degree() < 2) return out;

  // X - T*den(Y) as a polynomial in Y over T[T].
  Polynomial<P> moving = lift_constant(num) - lift_constant(den) * P::variable(ctx);
  if (w.degree() > 0) {
    P r = resultant(moving, lift_constant(w));
    if (r.is_zero()) throw DomainError("critical value resultant vanished identically");
    out.finite = r.monic();
  }

  if (gcd(den, den.derivative()).degree() > 0) out.infinity = true;
  const int dn = num.is_zero() ? -1 : num.degree();
  const int dd = den.degree();
  const int ord = dn - dd;
  if (ord >= 2) out.infinity = true;
  if (ord <= -2) out.finite = out.finite * P::variable(ctx);
  if (ord == 0) {
    // Ramified at infinity iff Z = 0 is a critical point of f(1/Z).
    P nr = detail::reversed(num, dn);
    P dr = detail::reversed(den, dd);
    P wr = nr.derivative() * dr - nr * dr.derivative();
    if (Tr::is_zero(wr.coeff(0))) {
      T v = num.lc() * Tr::inverse(den.lc());
      out.finite = out.finite * (P::variable(ctx) - P::constant(v));
    }
  }
  return out;
}

/// True when every critical value lies in {0, 1, infinity}.
template <class T>
bool critical_values_in_01inf(const CriticalValues<T>& cv) {
  using P = Polynomial<T>;
  if (cv.finite.is_zero()) return false;
  if (cv.finite.degree() == 0) return true;
  const auto ctx = cv.finite.context();
  P x = P::variable(ctx);
  P target = x * (x - P(ctx, {Ring<T>::one(ctx)}));
  return squarefree_part(cv.finite).divides(target);
}

}  // namespace belyi
